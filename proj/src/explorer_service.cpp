#include "greenseq/explorer_service.hpp"

#include <httplib.h>

#include <sstream>
#include <vector>

#include "greenseq/matrix_io.hpp"

namespace greenseq {

using nlohmann::json;

struct ExplorerService::Session {
    std::string id;
    ExchangeMatrix initial;
    GreenState current;
    bool green_so_far = true;
    std::chrono::steady_clock::time_point last_access;
    std::mutex mutex;

    Session(std::string id_, ExchangeMatrix b, std::chrono::steady_clock::time_point now)
        : id(std::move(id_)), initial(b), current(b), last_access(now) {}
};

namespace {

ServiceResponse error_response(int status, std::string_view kind, const std::string& message) {
    return {status, json{{"error", std::string(kind)}, {"message", message}}};
}

ServiceResponse error_response(int status, const Error& e) {
    auto r = error_response(status, to_string(e.kind()), e.what());
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        r.body["line"] = pe->line();
        r.body["column"] = pe->column();
    }
    return r;
}

std::vector<std::string> split_path(std::string path) {
    if (const auto q = path.find('?'); q != std::string::npos) path.resize(q);
    std::vector<std::string> parts;
    std::stringstream in(path);
    std::string part;
    while (std::getline(in, part, '/'))
        if (!part.empty()) parts.push_back(part);
    return parts;
}

json parse_body(const std::string& body) {
    if (body.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON body: ") + e.what(), 1, e.byte == 0 ? 1 : e.byte);
    }
}

// Recomputes the state from the initial matrix and history.
std::pair<GreenState, bool> replay(const ExchangeMatrix& initial, const MutationSequence& history) {
    GreenState state(initial);
    bool green = true;
    for (int k : history) {
        green = green && state.is_green(k);
        state = state.advance(k);
    }
    return {std::move(state), green};
}

}  // namespace

ExplorerService::ExplorerService(ServiceConfig config) : config_(std::move(config)), rng_(std::random_device{}()) {}

ExplorerService::~ExplorerService() = default;

std::size_t ExplorerService::session_count() const {
    std::lock_guard lock(sessions_mutex_);
    return sessions_.size();
}

std::size_t ExplorerService::evict_idle() {
    const auto now = config_.clock();
    std::lock_guard lock(sessions_mutex_);
    std::size_t dropped = 0;
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        if (now - it->second->last_access > config_.idle_timeout) {
            it = sessions_.erase(it);
            ++dropped;
        } else {
            ++it;
        }
    }
    return dropped;
}

std::string ExplorerService::fresh_id() {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    do {
        id.clear();
        for (int i = 0; i < 16; ++i) id.push_back(kHex[rng_() & 15]);
    } while (sessions_.count(id));
    return id;
}

std::shared_ptr<ExplorerService::Session> ExplorerService::find(const std::string& id) {
    std::lock_guard lock(sessions_mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) return nullptr;
    return it->second;
}

namespace {

json snapshot(const std::string& id, const ExchangeMatrix& initial, const GreenState& current, bool green_so_far) {
    const auto [replayed, replayed_green] = replay(initial, current.history());
    if (!(replayed.extended().data() == current.extended().data()) || replayed_green != green_so_far) {
        throw Error(ErrorKind::InternalSignViolation, "session state diverged from its replayed history");
    }
    return json{{"id", id},
                {"n", current.n()},
                {"b", matrix_to_json(current.b())},
                {"c", matrix_to_json(current.c())},
                {"history", indices_to_json(current.history().indices())},
                {"greens", indices_to_json(current.greens())},
                {"reds", indices_to_json(current.reds())},
                {"allRed", current.all_red()},
                {"isGreenSequenceSoFar", green_so_far},
                {"symmetrizer", ints_to_json(initial.symmetrizer())}};
}

}  // namespace

ServiceResponse ExplorerService::create_session(const std::string& body) {
    MatrixDocument doc = parse_matrix(body);
    const auto now = config_.clock();
    std::shared_ptr<Session> session;
    {
        std::lock_guard lock(sessions_mutex_);
        const std::string id = fresh_id();
        session = std::make_shared<Session>(id, doc.matrix, now);
        sessions_.emplace(id, session);
    }
    std::lock_guard lock(session->mutex);
    return {201, snapshot(session->id, session->initial, session->current, session->green_so_far)};
}

ServiceResponse ExplorerService::handle(const std::string& method, const std::string& path, const std::string& body) {
    evict_idle();
    const auto parts = split_path(path);
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "sessions") {
        return error_response(404, "NotFound", "no such endpoint: " + method + " " + path);
    }
    try {
        if (parts.size() == 2) {
            if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST to create a session");
            try {
                return create_session(body);
            } catch (const Error& e) {
                return error_response(400, e);
            }
        }

        auto session = find(parts[2]);
        if (!session) return error_response(404, "UnknownSession", "no session " + parts[2]);
        std::lock_guard lock(session->mutex);
        session->last_access = config_.clock();
        const std::string action = parts.size() > 3 ? parts[3] : "";
        if (parts.size() > 4) return error_response(404, "NotFound", "no such endpoint: " + path);

        auto current_snapshot = [&] {
            return snapshot(session->id, session->initial, session->current, session->green_so_far);
        };

        if (action.empty()) {
            if (method == "DELETE") {
                std::lock_guard sessions_lock(sessions_mutex_);
                sessions_.erase(session->id);
                return {204, json::object()};
            }
            if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
            return {200, current_snapshot()};
        }
        if (action == "mutations") {
            if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
            json request;
            try {
                request = parse_body(body);
            } catch (const Error& e) {
                return error_response(400, e);
            }
            if (!request.is_object() || !request.contains("k") || !request.at("k").is_number_integer()) {
                return error_response(422, to_string(ErrorKind::IndexOutOfRange), "expected {\"k\": <index>}");
            }
            const auto k = request.at("k").get<std::int64_t>();
            if (k < 1 || k > static_cast<std::int64_t>(session->current.n())) {
                return error_response(422, to_string(ErrorKind::IndexOutOfRange),
                                      "index " + std::to_string(k) + " is outside 1.." +
                                          std::to_string(session->current.n()));
            }
            const int kk = static_cast<int>(k);
            GreenState next = session->current.advance(kk);
            session->green_so_far = session->green_so_far && session->current.is_green(kk);
            session->current = std::move(next);
            return {200, current_snapshot()};
        }
        if (action == "undo") {
            if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
            if (session->current.history().empty()) {
                return error_response(409, "EmptyHistory", "nothing to undo");
            }
            MutationSequence history = session->current.history();
            history.pop_back();
            auto [state, green] = replay(session->initial, history);
            session->current = std::move(state);
            session->green_so_far = green;
            return {200, current_snapshot()};
        }
        if (action == "decomposition") {
            if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
            const auto d = decompose(session->current.extended().exchange_matrix());
            json body = decomposition_to_json(d);
            body["history"] = indices_to_json(session->current.history().indices());
            return {200, body};
        }
        if (action == "search") {
            if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
            json request;
            try {
                request = parse_body(body);
            } catch (const Error& e) {
                return error_response(400, e);
            }
            if (!request.is_object()) return error_response(400, "InvalidArgument", "expected a JSON object");
            SearchTarget target = SearchTarget::MaximalGreen;
            const std::string target_name = request.value("target", std::string("mgs"));
            if (target_name == "g2r") {
                target = SearchTarget::GreenToRed;
            } else if (target_name != "mgs") {
                return error_response(400, "InvalidArgument", "target must be \"mgs\" or \"g2r\"");
            }
            SearchOptions options;
            const std::string strategy = request.value("strategy", std::string("bfs"));
            if (strategy == "iddfs") {
                options.strategy = SearchStrategy::Iddfs;
            } else if (strategy != "bfs") {
                return error_response(400, "InvalidArgument", "strategy must be \"bfs\" or \"iddfs\"");
            }
            const json depth = request.value("maxDepth", json(kDefaultSearchDepth));
            if (!depth.is_number_integer() || depth.get<std::int64_t>() < 0 ||
                depth.get<std::int64_t>() > config_.max_search_depth) {
                return error_response(400, "InvalidArgument",
                                      "maxDepth must be an integer in 0.." + std::to_string(config_.max_search_depth));
            }
            options.max_depth = depth.get<int>();
            options.max_states = config_.max_search_states;
            options.timeout = config_.search_timeout;
            options.threads = config_.search_threads;
            const SearchOutcome outcome = find_sequence(session->initial, target, options);
            json out = outcome_to_json(outcome);
            // A budget cut-off is reported as an incomplete exhaustive search.
            if (outcome.status == SearchStatus::OutOfBudget) out["status"] = to_string(SearchStatus::ExhaustedToDepth);
            out["target"] = to_string(target);
            out["strategy"] = to_string(options.strategy);
            return {200, out};
        }
        return error_response(404, "NotFound", "no such endpoint: " + path);
    } catch (const Error& e) {
        const int status = e.kind() == ErrorKind::IndexOutOfRange ? 422 : 500;
        return error_response(status, e);
    }
}

struct ExplorerServer::Impl {
    httplib::Server server;
};

ExplorerServer::ExplorerServer(ExplorerService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>()), options_(std::move(options)) {
    auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
        const ServiceResponse r = service.handle(req.method, req.path, req.body);
        res.status = r.status;
        if (r.status != 204) res.set_content(r.body.dump(), "application/json");
    };
    impl_->server.Get(R"(/api/.*)", forward);
    impl_->server.Post(R"(/api/.*)", forward);
    impl_->server.Delete(R"(/api/.*)", forward);
}

ExplorerServer::~ExplorerServer() { stop(); }

bool ExplorerServer::bind() {
    if (options_.static_dir && !impl_->server.set_mount_point("/", *options_.static_dir)) return false;
    if (options_.port == 0) {
        port_ = impl_->server.bind_to_any_port(options_.host);
        return port_ > 0;
    }
    if (!impl_->server.bind_to_port(options_.host, options_.port)) return false;
    port_ = options_.port;
    return true;
}

bool ExplorerServer::listen() { return impl_->server.listen_after_bind(); }

void ExplorerServer::stop() { impl_->server.stop(); }

bool run_server(ExplorerService& service, const ServerOptions& options) {
    ExplorerServer server(service, options);
    return server.bind() && server.listen();
}

}  // namespace greenseq
