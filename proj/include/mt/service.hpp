#pragma once

#include <memory>
#include <string>

namespace mt {

// JSON-over-HTTP front end for the protocol engine. Auctions live in
// memory, keyed by the id returned from creation; one writer lock per
// auction serializes bids, so submission seq equals arrival order at the
// server.
class ServiceHost {
  public:
    ServiceHost();
    ~ServiceHost();
    ServiceHost(const ServiceHost&) = delete;
    ServiceHost& operator=(const ServiceHost&) = delete;

    // Binds to an ephemeral port and serves on a background thread;
    // returns the port (-1 on failure).
    int start_any_port(const std::string& addr);

    // Serves on the calling thread until stop(); false if binding failed.
    bool run_blocking(const std::string& addr, int port);

    void stop();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace mt
