#include "mt/service.hpp"

#include <map>
#include <mutex>
#include <thread>

#include <httplib.h>

#include "mt/json_io.hpp"
#include "mt/protocol.hpp"

namespace mt {

namespace {

json ok_envelope(json payload) {
    return json{{"status", "ok"}, {"payload", std::move(payload)}};
}

json error_envelope(const std::string& code) {
    return json{{"status", "error"}, {"error_code", code}, {"payload", nullptr}};
}

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& code) {
    reply(res, status, error_envelope(code));
}

void reply_proto_error(httplib::Response& res, ProtoError e) {
    reply_error(res, 400, to_string(e));
}

} // namespace

struct ServiceHost::Impl {
    struct Session {
        std::unique_ptr<ProtocolEngine> engine;
        std::mutex mu;
    };

    httplib::Server server;
    std::thread worker;
    std::mutex sessions_mu;
    std::map<std::string, Session> sessions;
    int next_id = 0;

    Impl() {
        // The library default closes a connection after 5 requests, which
        // races against busy clients pipelining on the same socket.
        server.set_keep_alive_max_count(1000);
        routes();
    }

    // Runs `fn` under the session lock; 404s when the id is unknown.
    template <typename Fn>
    void with_session(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
        Session* session = nullptr;
        {
            std::lock_guard<std::mutex> lock(sessions_mu);
            auto it = sessions.find(req.matches[1].str());
            if (it != sessions.end()) session = &it->second;
        }
        if (!session) {
            reply_error(res, 404, "UnknownAuction");
            return;
        }
        std::lock_guard<std::mutex> lock(session->mu);
        fn(*session->engine);
    }

    static bool parse_body(const httplib::Request& req, httplib::Response& res, json& out) {
        out = json::parse(req.body, nullptr, false);
        if (out.is_discarded()) {
            reply_error(res, 400, "MalformedJson");
            return false;
        }
        return true;
    }

    void routes() {
        server.Post("/auctions", [this](const httplib::Request& req, httplib::Response& res) {
            json body;
            if (!parse_body(req, res, body)) return;
            ProtocolParams params;
            try {
                params = body.get<ProtocolParams>();
                std::lock_guard<std::mutex> lock(sessions_mu);
                std::string id = "a" + std::to_string(++next_id);
                sessions[id].engine = std::make_unique<ProtocolEngine>(params);
                reply(res, 200, ok_envelope(json{{"auction_id", id}}));
            } catch (const std::exception&) {
                reply_error(res, 400, "InvalidParams");
            }
        });

        server.Post(R"(/auctions/([^/]+)/identities)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        json body;
                        if (!parse_body(req, res, body)) return;
                        with_session(req, res, [&](ProtocolEngine& engine) {
                            std::string token = body.value("token", "");
                            std::int64_t units = body.value("units", std::int64_t{1});
                            auto r = engine.register_identity(token, units);
                            if (!r.ok()) return reply_proto_error(res, r.error);
                            reply(res, 200,
                                  ok_envelope(json{{"token", token},
                                                   {"verified", r.value->verified},
                                                   {"max_units", r.value->max_units}}));
                        });
                    });

        server.Post(R"(/auctions/([^/]+)/open)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        with_session(req, res, [&](ProtocolEngine& engine) {
                            auto r = engine.open_window();
                            if (!r.ok()) return reply_proto_error(res, r.error);
                            reply(res, 200, ok_envelope(json{{"phase", to_string(*r.value)}}));
                        });
                    });

        server.Post(R"(/auctions/([^/]+)/bids)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        json body;
                        if (!parse_body(req, res, body)) return;
                        with_session(req, res, [&](ProtocolEngine& engine) {
                            Money amount, collateral;
                            std::string token;
                            try {
                                token = body.at("token").get<std::string>();
                                amount = money_from_json(body.at("amount"), "amount");
                                collateral = money_from_json(body.at("collateral"), "collateral");
                            } catch (const std::exception&) {
                                return reply_error(res, 400, "MalformedJson");
                            }
                            auto r = engine.submit_bid(token, amount, collateral);
                            if (!r.ok()) return reply_proto_error(res, r.error);
                            reply(res, 200, ok_envelope(json{{"seq", *r.value}}));
                        });
                    });

        server.Get(R"(/auctions/([^/]+)/indicative)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       with_session(req, res, [&](ProtocolEngine& engine) {
                           auto r = engine.disclose_indicative();
                           if (!r.ok()) return reply_proto_error(res, r.error);
                           reply(res, 200,
                                 ok_envelope(json{{"indicative_price", money_to_json(*r.value)}}));
                       });
                   });

        server.Post(R"(/auctions/([^/]+)/close)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        json body = json::object();
                        if (!req.body.empty() && !parse_body(req, res, body)) return;
                        with_session(req, res, [&](ProtocolEngine& engine) {
                            TieBreak tb = TieBreak::chronological();
                            try {
                                if (body.contains("tie_break"))
                                    tb = body.at("tie_break").get<TieBreak>();
                            } catch (const std::exception&) {
                                return reply_error(res, 400, "MalformedJson");
                            }
                            auto r = engine.close_and_clear(tb);
                            if (!r.ok()) return reply_proto_error(res, r.error);
                            reply(res, 200, ok_envelope(json(*r.value)));
                        });
                    });

        server.Post(R"(/auctions/([^/]+)/settle)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        with_session(req, res, [&](ProtocolEngine& engine) {
                            auto r = engine.settle();
                            if (!r.ok()) return reply_proto_error(res, r.error);
                            reply(res, 200, ok_envelope(json(*r.value)));
                        });
                    });

        server.Get(R"(/auctions/([^/]+)/outcome)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       with_session(req, res, [&](ProtocolEngine& engine) {
                           if (!engine.outcome())
                               return reply_proto_error(res, ProtoError::WrongPhase);
                           reply(res, 200, ok_envelope(json(*engine.outcome())));
                       });
                   });

        server.Get(R"(/auctions/([^/]+)/ledger)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       with_session(req, res, [&](ProtocolEngine& engine) {
                           reply(res, 200, ok_envelope(ledger_to_json(engine.ledger())));
                       });
                   });
    }
};

ServiceHost::ServiceHost() : impl_(std::make_unique<Impl>()) {}

ServiceHost::~ServiceHost() { stop(); }

int ServiceHost::start_any_port(const std::string& addr) {
    int port = impl_->server.bind_to_any_port(addr.c_str());
    if (port <= 0) return -1;
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return port;
}

bool ServiceHost::run_blocking(const std::string& addr, int port) {
    return impl_->server.listen(addr.c_str(), port);
}

void ServiceHost::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

} // namespace mt
