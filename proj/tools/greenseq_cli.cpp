// greenseq: command-line front end for mutation traces, green sequence search
// and the explorer service.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "greenseq/dot.hpp"
#include "greenseq/explorer_service.hpp"
#include "greenseq/matrix_io.hpp"

using namespace greenseq;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

MatrixDocument load_document(const std::string& path) {
    try {
        return parse_matrix(read_input(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what(),
                         e.line(), e.column());
    }
}

int default_depth() {
    const char* env = std::getenv("GREENSEQ_DEPTH");
    if (!env || !*env) return kDefaultSearchDepth;
    try {
        std::size_t used = 0;
        const int d = std::stoi(env, &used);
        if (used == std::string_view(env).size() && d >= 0) return d;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument, std::string("GREENSEQ_DEPTH must be a nonnegative integer, got ") + env);
}

std::string block_list(const std::vector<std::vector<int>>& blocks) {
    std::string out;
    for (const auto& block : blocks) {
        out += out.empty() ? "{" : " {";
        for (std::size_t i = 0; i < block.size(); ++i) out += (i ? "," : "") + std::to_string(block[i]);
        out += "}";
    }
    return out;
}

std::string index_list(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

void print_search(const SearchOutcome& o, bool as_json) {
    if (as_json) {
        std::cout << outcome_to_json(o).dump(2) << '\n';
        return;
    }
    std::cout << "status: " << to_string(o.status) << '\n';
    if (o.sequence) std::cout << "sequence: " << o.sequence->to_string() << " (length " << o.sequence->size() << ")\n";
    std::cout << "depth bound: " << o.depth << '\n'
              << "states visited: " << o.states_visited << '\n'
              << "elapsed: " << std::chrono::duration<double, std::milli>(o.elapsed).count() << " ms\n";
    if (o.persistence_violations) std::cout << "persistence violations: " << o.persistence_violations << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exchange matrix mutation and maximal green sequences"};
    app.require_subcommand(1);

    std::string file;
    std::string seq_text;
    bool as_json = false;

    auto* mutate_cmd = app.add_subcommand("mutate", "print the extended matrix after each step of a sequence");
    mutate_cmd->add_option("--seq", seq_text, "comma-separated 1-based indices")->required();
    mutate_cmd->add_flag("--json", as_json, "JSON output");
    mutate_cmd->add_option("file", file, "matrix file (JSON or grid, - for stdin)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check whether a sequence is (maximal) green");
    verify_cmd->add_option("--seq", seq_text, "comma-separated 1-based indices")->required();
    verify_cmd->add_flag("--json", as_json, "JSON output");
    verify_cmd->add_option("file", file, "matrix file")->required();

    std::string target_name = "mgs";
    std::string strategy_name = "bfs";
    std::optional<int> max_depth;
    std::size_t max_states = SearchOptions{}.max_states;
    unsigned threads = 1;
    std::optional<long> timeout_ms;
    bool reduce = false;
    auto* find_cmd = app.add_subcommand("find", "search for a shortest maximal green or green-to-red sequence");
    find_cmd->add_option("--target", target_name, "mgs or g2r")->check(CLI::IsMember({"mgs", "g2r"}));
    find_cmd->add_option("--max-depth", max_depth, "longest sequence tried (default 10 or $GREENSEQ_DEPTH)")
        ->check(CLI::NonNegativeNumber);
    find_cmd->add_option("--strategy", strategy_name, "bfs or iddfs")->check(CLI::IsMember({"bfs", "iddfs"}));
    find_cmd->add_option("--max-states", max_states, "state budget");
    find_cmd->add_option("--threads", threads, "worker threads for expansion")->check(CLI::Range(1u, 256u));
    find_cmd->add_option("--timeout-ms", timeout_ms, "wall-clock budget");
    find_cmd->add_flag("--reduce", reduce, "search each irreducible block separately and compose");
    find_cmd->add_flag("--json", as_json, "JSON output");
    find_cmd->add_option("file", file, "matrix file")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "split the quiver into irreducible blocks");
    decompose_cmd->add_flag("--json", as_json, "JSON output");
    decompose_cmd->add_option("file", file, "matrix file")->required();

    std::string attached_file;
    int coherence_depth = CoherenceOptions{}.depth;
    bool no_certificates = false;
    auto* coherence_cmd = app.add_subcommand("coherence", "bounded check that attached rows stay sign-coherent");
    coherence_cmd->add_option("--attached", attached_file, "attached rows (defaults to those in the matrix file)");
    coherence_cmd->add_option("--depth", coherence_depth, "longest sequence tried")->check(CLI::NonNegativeNumber);
    coherence_cmd->add_flag("--no-certificates", no_certificates, "always enumerate");
    coherence_cmd->add_flag("--json", as_json, "JSON output");
    coherence_cmd->add_option("file", file, "matrix file")->required();

    bool dot = false;
    std::string out_file;
    auto* quiver_cmd = app.add_subcommand("quiver", "export the quiver");
    quiver_cmd->add_flag("--dot", dot, "Graphviz output (the only format)");
    quiver_cmd->add_option("--seq", seq_text, "mutate first and color vertices green/red");
    quiver_cmd->add_option("--out", out_file, "write to a file instead of stdout");
    quiver_cmd->add_option("file", file, "matrix file")->required();

    ServerOptions server;
    auto* serve_cmd = app.add_subcommand("serve", "run the explorer HTTP service");
    serve_cmd->add_option("--port", server.port, "TCP port")->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--host", server.host, "bind address");
    serve_cmd->add_option("--static-dir", server.static_dir, "directory served at /");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*mutate_cmd) {
            const auto doc = load_document(file);
            const auto seq = MutationSequence::parse(seq_text);
            ExtendedMatrix m = doc.attached ? stack(doc.matrix, *doc.attached) : frame(doc.matrix);
            json trace = json::array();
            const auto n = m.n();
            auto emit = [&](std::size_t step, int k) {
                if (as_json) {
                    trace.push_back({{"step", step}, {"k", k ? json(k) : json(nullptr)}, {"matrix", matrix_to_json(m.data())}});
                } else {
                    std::cout << (step ? "after mu_" + std::to_string(k) : std::string("initial")) << ":\n"
                              << format_matrix(m.data(), n) << '\n';
                }
            };
            emit(0, 0);
            seq.check_range(n);
            for (std::size_t i = 0; i < seq.size(); ++i) {
                m = mutate(m, seq[i]);
                emit(i + 1, seq[i]);
            }
            if (as_json) std::cout << trace.dump(2) << '\n';
            return kExitOk;
        }
        if (*verify_cmd) {
            const auto doc = load_document(file);
            const auto seq = MutationSequence::parse(seq_text);
            const auto v = verify_sequence(doc.matrix, seq);
            if (as_json) {
                std::cout << verdict_to_json(v).dump(2) << '\n';
            } else {
                std::cout << "green sequence: " << (v.is_green_sequence ? "yes" : "no") << '\n'
                          << "green-to-red: " << (v.is_green_to_red ? "yes" : "no") << '\n'
                          << "maximal green: " << (v.is_maximal_green ? "yes" : "no") << '\n';
                if (v.first_violation) {
                    std::cout << "first violation: step " << v.first_violation->step << ", index "
                              << v.first_violation->index << " is " << to_string(v.first_violation->sign) << '\n';
                }
            }
            return v.is_maximal_green ? kExitOk : kExitNegative;
        }
        if (*find_cmd) {
            const auto doc = load_document(file);
            SearchOptions options;
            options.max_depth = max_depth ? *max_depth : default_depth();
            options.strategy = strategy_name == "iddfs" ? SearchStrategy::Iddfs : SearchStrategy::Bfs;
            options.max_states = max_states;
            options.threads = threads;
            if (timeout_ms) options.timeout = std::chrono::milliseconds(*timeout_ms);
            const SearchTarget target = target_name == "g2r" ? SearchTarget::GreenToRed : SearchTarget::MaximalGreen;
            SearchOutcome outcome;
            if (reduce) {
                const auto r = reduce_and_search(doc.matrix, target, options);
                outcome = r.outcome;
                if (as_json) {
                    json j = outcome_to_json(outcome);
                    j["decomposition"] = decomposition_to_json(r.decomposition);
                    j["blocks"] = json::array();
                    for (const auto& b : r.block_outcomes) j["blocks"].push_back(outcome_to_json(b));
                    std::cout << j.dump(2) << '\n';
                } else {
                    std::cout << "blocks: " << block_list(r.decomposition.blocks) << '\n';
                    if (r.failing_block) {
                        std::cout << "no sequence for block " << block_list({r.decomposition.blocks[*r.failing_block]})
                                  << '\n';
                    }
                    print_search(outcome, false);
                }
            } else {
                outcome = find_sequence(doc.matrix, target, options);
                print_search(outcome, as_json);
            }
            return outcome.found() ? kExitOk : kExitNegative;
        }
        if (*decompose_cmd) {
            const auto doc = load_document(file);
            const auto d = decompose(doc.matrix);
            if (as_json) {
                std::cout << decomposition_to_json(d).dump(2) << '\n';
            } else {
                std::cout << "blocks: " << block_list(d.blocks) << '\n'
                          << "order: " << index_list(d.permutation) << '\n'
                          << format_matrix(relabel(doc.matrix, d.permutation).matrix());
            }
            return kExitOk;
        }
        if (*coherence_cmd) {
            const auto doc = load_document(file);
            IntMatrix attached;
            if (!attached_file.empty()) {
                attached = parse_int_matrix(read_input(attached_file));
            } else if (doc.attached) {
                attached = *doc.attached;
            } else {
                throw Error(ErrorKind::InvalidArgument, "no attached rows: pass --attached or add them to the file");
            }
            CoherenceOptions options;
            options.depth = coherence_depth;
            options.use_certificates = !no_certificates;
            const auto v = check_uniform_sign_coherence(doc.matrix, attached, options);
            if (as_json) {
                std::cout << coherence_to_json(v).dump(2) << '\n';
            } else if (v.counterexample) {
                std::cout << "counterexample: sequence " << v.counterexample->sequence.to_string() << " leaves column "
                          << v.counterexample->column << " mixed (row " << v.counterexample->row << ")\n";
            } else if (v.verified()) {
                std::cout << "sign-coherent for all sequences up to length " << v.depth;
                if (v.certificate == CoherenceCertificate::Nonnegative) std::cout << " (nonnegative attachment)";
                if (v.certificate == CoherenceCertificate::RankAtMostOne) std::cout << " (rank at most one)";
                std::cout << '\n';
            } else {
                std::cout << "state budget exhausted after " << v.states_visited << " states\n";
            }
            return v.verified() ? kExitOk : kExitNegative;
        }
        if (*quiver_cmd) {
            const auto doc = load_document(file);
            std::string text;
            if (seq_text.empty()) {
                text = emit_dot(underlying_quiver(doc.matrix));
            } else {
                GreenState state(doc.matrix);
                for (int k : MutationSequence::parse(seq_text)) state = state.advance(k);
                std::map<int, VertexColor> colors;
                for (int g : state.greens()) colors[g] = VertexColor::Green;
                for (int r : state.reds()) colors[r] = VertexColor::Red;
                text = emit_dot(underlying_quiver(state.b()), colors);
            }
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file, std::ios::binary);
                if (!(out << text)) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_file);
            }
            return kExitOk;
        }
        if (*serve_cmd) {
            ExplorerService service;
            ExplorerServer http(service, server);
            if (!http.bind()) {
                std::cerr << "greenseq: cannot listen on " << server.host << ":" << server.port << '\n';
                return kExitError;
            }
            std::cerr << "listening on http://" << server.host << ":" << http.port() << '\n';
            return http.listen() ? kExitOk : kExitError;
        }
    } catch (const Error& e) {
        std::cerr << "greenseq: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "greenseq: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
