#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mt/auction.hpp"
#include "mt/money.hpp"

namespace mt {

// Lifecycle of one ticket sale. Transitions are monotone:
// Announced -> Open -> Closed -> Cleared -> Settled.
enum class Phase { Announced, Open, Closed, Cleared, Settled };

const char* to_string(Phase phase);

enum class ProtoError {
    None,
    WrongPhase,
    DuplicateIdentity,
    InvalidUnits,
    UnverifiedIdentity,
    WindowClosed,
    BelowFloor,
    InsufficientCollateral,
    DuplicateBid,
    DisclosureDisabled,
    RebateOutOfRange,
    UnknownToken,
    NothingDue,
};

const char* to_string(ProtoError error);

// Outcome-or-error for protocol operations; rejected operations leave the
// engine state untouched.
template <typename T>
struct Result {
    ProtoError error = ProtoError::None;
    std::optional<T> value;

    bool ok() const { return error == ProtoError::None; }
    static Result success(T v) { return {ProtoError::None, std::move(v)}; }
    static Result failure(ProtoError e) { return {e, std::nullopt}; }
};

struct IdentityRecord {
    bool verified = false;
    std::int64_t max_units = 1;
    bool has_active_bid = false;
};

struct JournalEntry {
    enum class Kind { Deposit, Refund, Payment };
    std::uint64_t seq = 0; // position in the journal
    std::uint64_t t = 0;   // logical time of the posting
    Kind kind = Kind::Deposit;
    std::string token;
    Money amount = 0;
};

const char* to_string(JournalEntry::Kind kind);

// Append-only collateral accounting. Balances are derivable by replaying
// the journal: deposits add, refunds and payments subtract.
struct CollateralLedger {
    std::vector<JournalEntry> journal;
    std::unordered_map<std::string, Money> balances;

    void post(JournalEntry::Kind kind, const std::string& token, Money amount,
              std::uint64_t t);
    Money balance(const std::string& token) const;
    Money total_deposits() const;
    Money total_refunds() const;
    Money total_payments() const;
    Money total_balances() const;
    // Recomputes balances from the journal alone (for audit checks).
    std::unordered_map<std::string, Money> replay() const;
};

struct ProtocolParams {
    Money floor = 0;
    std::int64_t capacity = 1;
    double collateral_ratio = 1.0;        // in (0, 1]
    std::uint64_t settlement_deadline = 0; // logical-clock duration for dues
    bool disclosure_enabled = true;
    Money rebate_per_ticket = 0; // applied at settlement; <= price - floor
};

struct WinnerSettlement {
    std::string token;
    Money refund = 0;     // collateral returned
    Money payment = 0;    // charged now
    Money amount_due = 0; // remainder owed when collateral fell short
    std::uint64_t deadline = 0; // logical time the due must be paid by
};

struct LoserSettlement {
    std::string token;
    Money refund = 0;
};

struct SettlementReport {
    Money price = 0;
    Money rebate_per_ticket = 0;
    std::vector<WinnerSettlement> winners;
    std::vector<LoserSettlement> losers;
};

struct ForfeitureEvent {
    std::string token;
    Money amount_due_forfeited = 0;
    Money collateral_retained = 0; // funds already collected, kept as penalty
};

struct ForfeitureReport {
    std::vector<ForfeitureEvent> forfeited;
    std::int64_t units_returned = 0;
};

// Pluggable identity verification; the default accepts everyone.
using IdentityVerifier = std::function<bool(const std::string& token)>;

// Single-auction state machine: registration, collateralized bidding,
// marginal-price clearing, settlement with refunds/dues, default expiry.
// Every mutating operation advances an internal logical clock; rejected
// operations do not, so identical call sequences produce identical journals.
class ProtocolEngine {
  public:
    explicit ProtocolEngine(ProtocolParams params, IdentityVerifier verifier = {});

    Phase phase() const { return phase_; }
    std::uint64_t now() const { return clock_; }
    const ProtocolParams& params() const { return params_; }
    const BidBook& book() const { return book_; }
    const CollateralLedger& ledger() const { return ledger_; }
    const std::unordered_map<std::string, IdentityRecord>& registry() const {
        return registry_;
    }
    const std::optional<AuctionOutcome>& outcome() const { return outcome_; }
    const std::optional<SettlementReport>& settlement() const { return settlement_; }
    // Unsold units including tickets returned by defaults (the cleared
    // outcome itself never changes).
    std::int64_t unsold_after_defaults() const;

    // Smallest collateral accepted for a bid of `amount`.
    Money required_collateral(Money amount) const;

    // Announced/Open only. One record per token; each verified token may
    // place one bid, so multi-unit buyers register several tokens.
    Result<IdentityRecord> register_identity(const std::string& token,
                                             std::int64_t requested_units);

    // Announced -> Open.
    Result<Phase> open_window();

    // Open only; returns the assigned submission seq. The collateral is
    // journaled as a deposit.
    Result<std::uint64_t> submit_bid(const std::string& token, Money amount,
                                     Money collateral);

    // Mid-window clearing-price preview (when enabled by params).
    Result<Money> disclose_indicative() const;

    // Open -> Closed -> Cleared in one atomic step; the stored outcome is
    // immutable afterwards.
    Result<AuctionOutcome> close_and_clear(const TieBreak& tie_break);

    // Cleared -> Settled. Winners are charged price - rebate_per_ticket
    // against their collateral (shortfalls become dues with a deadline);
    // losers get a full refund.
    Result<SettlementReport> settle();

    // Pays off an outstanding due in full (journaled as deposit + payment).
    Result<Money> post_due_payment(const std::string& token);

    // Settled only: winners whose due is unpaid past its deadline forfeit
    // the ticket; collected funds are retained.
    Result<ForfeitureReport> expire_defaults(std::uint64_t now);

  private:
    struct DueRecord {
        Money amount = 0;
        std::uint64_t deadline = 0;
        Money collected = 0; // collateral applied at settlement
        bool defaulted = false;
    };

    std::uint64_t tick() { return ++clock_; }

    ProtocolParams params_;
    IdentityVerifier verifier_;
    Phase phase_ = Phase::Announced;
    std::uint64_t clock_ = 0;
    BidBook book_;
    std::unordered_map<std::string, IdentityRecord> registry_;
    CollateralLedger ledger_;
    std::optional<AuctionOutcome> outcome_;
    std::optional<SettlementReport> settlement_;
    std::unordered_map<std::string, DueRecord> dues_;
    std::int64_t forfeited_units_ = 0;
};

} // namespace mt
