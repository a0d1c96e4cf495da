#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include <json.hpp>

#include "greenseq/green_search.hpp"

namespace greenseq {

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
};

struct ServiceConfig {
    std::chrono::seconds idle_timeout{3600};
    std::chrono::milliseconds search_timeout{10'000};
    int max_search_depth = 12;
    std::size_t max_search_states = 2'000'000;
    unsigned search_threads = 1;
    // Injectable for tests.
    std::function<std::chrono::steady_clock::time_point()> clock = [] { return std::chrono::steady_clock::now(); };
};

// In-memory exploration sessions behind a small JSON API. `handle` is
// transport-free; `run_server` puts it behind HTTP.
class ExplorerService {
public:
    explicit ExplorerService(ServiceConfig config = {});
    ~ExplorerService();

    ExplorerService(const ExplorerService&) = delete;
    ExplorerService& operator=(const ExplorerService&) = delete;

    ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);

    // Drops sessions idle for longer than the configured timeout; returns how many.
    std::size_t evict_idle();
    std::size_t session_count() const;

private:
    struct Session;

    ServiceResponse create_session(const std::string& body);
    std::shared_ptr<Session> find(const std::string& id);
    std::string fresh_id();

    ServiceConfig config_;
    mutable std::mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::mt19937_64 rng_;
};

struct ServerOptions {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    std::optional<std::string> static_dir;
};

// HTTP front end: /api/... goes to the service, everything else to static_dir.
class ExplorerServer {
public:
    ExplorerServer(ExplorerService& service, ServerOptions options);
    ~ExplorerServer();

    // Returns false if the port or the static directory is unusable.
    bool bind();
    int port() const noexcept { return port_; }
    // Blocks until stop().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    ServerOptions options_;
    int port_ = 0;
};

// bind() + listen().
bool run_server(ExplorerService& service, const ServerOptions& options);

}  // namespace greenseq
