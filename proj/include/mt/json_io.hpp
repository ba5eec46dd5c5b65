#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mt/agents.hpp"
#include "mt/auction.hpp"
#include "mt/dominance.hpp"
#include "mt/money.hpp"
#include "mt/protocol.hpp"
#include "mt/scalper.hpp"
#include "mt/simulation.hpp"
#include "mt/welfare.hpp"

// JSON wire formats. Monetary amounts serialize as exact two-decimal
// strings; parsing also accepts whole-currency integers.

namespace mt {

using json = nlohmann::json;

json money_to_json(Money cents);
Money money_from_json(const json& j, const std::string& field);

void to_json(json& j, const TieBreak& t);
void from_json(const json& j, TieBreak& t);

void to_json(json& j, const AuctionOutcome& o);
void from_json(const json& j, AuctionOutcome& o);

void to_json(json& j, const WelfareReport& r);
void to_json(json& j, const ExcessReport& r);

void to_json(json& j, const ValuationDistribution& d);
void from_json(const json& j, ValuationDistribution& d);

void to_json(json& j, const MetricSummary& s);
void to_json(json& j, const SummaryStats& s);

void to_json(json& j, const DominanceViolation& v);
void to_json(json& j, const DominanceVerdict& v);

void to_json(json& j, const LoserReport& r);

void to_json(json& j, const ProtocolParams& p);
void from_json(const json& j, ProtocolParams& p);

void to_json(json& j, const JournalEntry& e);
void from_json(const json& j, JournalEntry& e);

void to_json(json& j, const WinnerSettlement& w);
void to_json(json& j, const LoserSettlement& l);
void to_json(json& j, const SettlementReport& r);
void to_json(json& j, const ForfeitureEvent& e);
void to_json(json& j, const ForfeitureReport& r);

// Strict scenario parsing: unknown or missing fields raise
// std::invalid_argument naming the offending field.
ScenarioConfig parse_scenario_config(const json& j);

// Balances (sorted by token) plus the full journal.
json ledger_to_json(const CollateralLedger& ledger);

// One JSON object per line, in journal order; round-trips exactly.
std::string journal_to_ndjson(const std::vector<JournalEntry>& journal);
std::vector<JournalEntry> journal_from_ndjson(const std::string& text);

} // namespace mt
