#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "doubled/json_io.hpp"
#include "doubled/miner.hpp"
#include "doubled/recognition.hpp"
#include "doubled/sampling.hpp"

namespace {

using namespace doubled;

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("DOUBLED_LOG");
        return env ? std::atoi(env) : 0;
    }();
    return level;
}

void log_note(int level, const std::string& msg) {
    if (log_level() >= level) std::cerr << "[doubled] " << msg << "\n";
}

RecognitionOutcome run_recognizer(const std::string& cls, const Graph& g) {
    if (cls == "split") return recognize_split(g);
    if (cls == "almost-split") return recognize_almost_split(g);
    return recognize_doubled(g);
}

std::string human_outcome(const std::string& cls, const Graph& g, const RecognitionOutcome& out) {
    std::ostringstream os;
    auto pair_list = [](const std::vector<std::pair<int, int>>& ps) {
        std::ostringstream s;
        if (ps.empty()) s << "none";
        for (std::size_t i = 0; i < ps.size(); ++i)
            s << (i ? " " : "") << "(" << ps[i].first << "," << ps[i].second << ")";
        return s.str();
    };
    auto vertex_list = [](const std::vector<int>& vs) {
        std::ostringstream s;
        s << "{";
        for (std::size_t i = 0; i < vs.size(); ++i) s << (i ? "," : "") << vs[i];
        s << "}";
        return s.str();
    };
    if (out.certificate) {
        const auto& c = *out.certificate;
        os << "member of " << cls << "\n";
        os << "  A = " << vertex_list(c.a_side) << "  matched pairs: " << pair_list(c.matched) << "\n";
        os << "  B = " << vertex_list(c.b_side) << "  antimatched pairs: " << pair_list(c.antimatched);
    } else {
        const auto& w = *out.witness;
        os << "not " << cls << "; witness " << vertex_list(w.vertices);
        if (w.kind) os << " kind " << PatternCatalog::name(*w.kind);
        os << "\n  witness edges: " << pair_list(g.induced(w.vertices).edges());
    }
    return os.str();
}

int cmd_recognize(const std::string& cls, const std::vector<std::string>& inline_graphs,
                  const std::string& input, const std::string& format, int jobs) {
    std::vector<std::string> lines;
    if (!inline_graphs.empty()) {
        lines = inline_graphs;
    } else {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (input != "-") {
            file.open(input);
            if (!file) {
                std::cerr << "error: cannot open " << input << "\n";
                return 1;
            }
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    }

    std::vector<std::string> outputs(lines.size());
    std::vector<int> member(lines.size(), 0);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string parse_error;
    std::mutex err_mu;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= lines.size() || failed.load()) return;
            Graph g;
            try {
                g = graph6_decode(lines[i]);
            } catch (const Graph6ParseError& e) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!failed.exchange(true))
                    parse_error = "line " + std::to_string(i + 1) + ": " + e.what();
                return;
            }
            const RecognitionOutcome out = run_recognizer(cls, g);
            member[i] = out.is_member() ? 1 : 0;
            if (format == "human") {
                outputs[i] = "graph " + std::to_string(i + 1) + ": " + human_outcome(cls, g, out);
            } else if (format == "tsv") {
                std::ostringstream os;
                os << (i + 1) << "\t" << lines[i] << "\t"
                   << (out.is_member() ? "member" : "non-member") << "\t";
                if (out.certificate)
                    os << out.certificate->matched.size() + out.certificate->antimatched.size()
                       << " pairs";
                else
                    os << (out.witness->kind ? PatternCatalog::name(*out.witness->kind)
                                             : std::string("unnamed"))
                       << " on " << out.witness->vertices.size() << " vertices";
                outputs[i] = os.str();
            } else {
                outputs[i] = outcome_json(cls, out).dump();
            }
        }
    };

    const int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (failed.load()) {
        std::cerr << "error: " << parse_error << "\n";
        return 1;
    }
    bool all_members = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::cout << outputs[i] << "\n";
        all_members = all_members && member[i];
    }
    return all_members ? 0 : 2;
}

int cmd_enumerate(int max_order) {
    if (max_order > 9) {
        std::cerr << "error: the built-in generator is capped at order 9\n";
        return 1;
    }
    enumerate_up_to(max_order, [](const Graph& g) { std::cout << graph6_encode(g) << "\n"; });
    return 0;
}

int cmd_mine(const std::string& cls, int max_order, const std::string& input) {
    ObstructionSet obs;
    const ClassPredicate pred = class_predicate_for(cls);
    log_note(1, "mining " + cls + " obstructions up to order " + std::to_string(max_order));
    if (!input.empty()) {
        if (max_order > 10) {
            std::cerr << "error: mining is capped at order 10\n";
            return 1;
        }
        std::istream* in = &std::cin;
        std::ifstream file;
        if (input != "-") {
            file.open(input);
            if (!file) {
                std::cerr << "error: cannot open " << input << "\n";
                return 1;
            }
            in = &file;
        }
        obs = mine_obstructions_graph6(pred, cls, max_order, *in);
    } else {
        if (max_order > 9) {
            std::cerr << "error: the built-in generator is capped at order 9; "
                         "pass --input with a graph6 corpus for larger orders\n";
            return 1;
        }
        obs = mine_obstructions(pred, cls, max_order);
    }
    log_note(1, "found " + std::to_string(obs.members.size()) + " obstructions");
    for (const auto& m : obs.members)
        std::cout << m.name << "\t" << graph6_encode(m.graph) << "\n";
    std::cout << obstruction_summary_json(obs).dump() << "\n";
    return 0;
}

int cmd_catalog() {
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : PatternCatalog::all_ids())
        std::cout << PatternCatalog::name(id) << "\t" << graph6_encode(cat.graph(id)) << "\n";
    return 0;
}

int cmd_check_cert(const std::string& g6, const std::string& cert_path) {
    Graph g;
    try {
        g = graph6_decode(g6);
    } catch (const Graph6ParseError& e) {
        std::cerr << "error: bad graph6: " << e.what() << "\n";
        return 1;
    }
    nlohmann::json j;
    try {
        if (cert_path == "-") {
            std::cin >> j;
        } else {
            std::ifstream f(cert_path);
            if (!f) {
                std::cerr << "error: cannot open " << cert_path << "\n";
                return 1;
            }
            f >> j;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: bad certificate JSON: " << e.what() << "\n";
        return 1;
    }
    try {
        const DoubledCertificate cert = certificate_from_json(j);
        if (auto bad = check_aligned_detail(g, cert)) {
            std::cout << "invalid: " << bad->clause << " (" << bad->u << "," << bad->v << ","
                      << bad->w << ")\n";
            return 2;
        }
        std::cout << "valid\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

struct CheckTally {
    int failures = 0;
    void report(const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        if (!pass) ++failures;
    }
};

int cmd_selfcheck(bool full, std::uint64_t seed, bool corrupt_catalog) {
    CheckTally t;
    const int sweep_max = full ? 8 : 7;

    { // enumeration: augmentation vs labelled filter
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= 6; ++n) {
            std::uint64_t cnt = 0;
            enumerate_graphs(n, [&](const Graph&) { ++cnt; });
            const std::uint64_t brute = count_graphs_filter(n);
            detail += (n ? " " : "") + std::to_string(cnt);
            if (cnt != brute) ok = false;
        }
        t.report("enumerate-dual-method", ok, "counts n<=6: " + detail);
    }

    { // split obstructions
        const auto obs = mine_obstructions(class_predicate_for("split"), "split", 5);
        const auto& cat = PatternCatalog::instance();
        bool ok = obs.members.size() == 3;
        std::vector<PatternId> expect = {{PatternName::C4, false}, {PatternName::C4, true},
                                         {PatternName::C5, false}};
        for (const auto& id : expect)
            ok = ok && obs.find_isomorphic(cat.graph(id)).has_value();
        t.report("split-obstructions", ok, std::to_string(obs.members.size()) + " mined, expect C4, co-C4, C5");
    }

    { // circus reproduction (fault-injection hook lives here)
        const auto obs = mine_obstructions(class_predicate_for("almost-split"), "almost-split", 6);
        const auto& cat = PatternCatalog::instance();
        std::vector<CanonicalForm> expect;
        for (PatternId id : PatternCatalog::circus()) {
            Graph g = cat.graph(id);
            if (corrupt_catalog && id.name == PatternName::Watch && !id.complemented) {
                Graph bad = g;
                bad.remove_edge(0, 1);
                bad.add_edge(0, 2);
                g = bad;
            }
            expect.push_back(canonicalize(g));
        }
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        std::vector<CanonicalForm> got;
        for (const auto& m : obs.members) got.push_back(m.canon);
        std::sort(got.begin(), got.end());
        t.report("circus-reproduction", got == expect,
                 std::to_string(obs.members.size()) + " mined vs " + std::to_string(expect.size()) +
                     " transcribed");
    }

    { // recognizers against the oracles
        std::uint64_t checked = 0, bad = 0;
        enumerate_up_to(sweep_max, [&](const Graph& g) {
            ++checked;
            const auto rd = recognize_doubled(g);
            if (rd.is_member() != is_doubled_oracle(g).has_value()) ++bad;
            if (rd.certificate && !check_aligned(g, *rd.certificate)) ++bad;
            const auto ra = recognize_almost_split(g);
            if (ra.is_member() != is_almost_split_oracle(g).has_value()) ++bad;
        });
        t.report("recognizer-vs-oracle", bad == 0,
                 std::to_string(checked) + " graphs n<=" + std::to_string(sweep_max) + ", " +
                     std::to_string(bad) + " disagreements");
    }

    { // chain + closure properties
        std::uint64_t bad = 0;
        enumerate_up_to(full ? 7 : 6, [&](const Graph& g) {
            const bool sp = split_partition(g).has_value();
            const bool as = is_almost_split_oracle(g).has_value();
            const bool db = is_doubled_oracle(g).has_value();
            if (sp && !as) ++bad;
            if (as && !db) ++bad;
            if (db != is_doubled_oracle(g.complement()).has_value()) ++bad;
            if (as != is_almost_split_oracle(g.complement()).has_value()) ++bad;
            for (int v = 0; v < g.order(); ++v) {
                const Graph h = g.with_vertex_deleted(v);
                if (sp && !split_partition(h).has_value()) ++bad;
                if (as && !is_almost_split_oracle(h).has_value()) ++bad;
                if (db && !is_doubled_oracle(h).has_value()) ++bad;
            }
        });
        t.report("class-chain-and-closure", bad == 0, std::to_string(bad) + " violations");
    }

    if (full) {
        const auto family = mine_obstructions(class_predicate_for("doubled"), "doubled", 9);
        {
            const bool ok44 = family.members.size() == 44 || family.up_to_complement_count() == 44;
            t.report("family-f-count", ok44,
                     std::to_string(family.members.size()) + " distinct, " +
                         std::to_string(family.up_to_complement_count()) + " up to complement");
        }
        {
            std::uint64_t bad = 0, checked = 0;
            enumerate_up_to(8, [&](const Graph& g) {
                ++checked;
                if (recognize_doubled(g).is_member() != !family.contains_obstruction(g)) ++bad;
            });
            t.report("family-f-vs-recognizer", bad == 0,
                     std::to_string(checked) + " graphs, " + std::to_string(bad) + " disagreements");
        }
        {
            Rng rng(seed);
            std::uint64_t bad = 0;
            for (int n : {12, 14, 16})
                for (int i = 0; i < 1000; ++i) {
                    const Graph g = random_graph(n, rng);
                    if (recognize_doubled(g).is_member() != !family.contains_obstruction(g)) ++bad;
                }
            t.report("sampled-sweep", bad == 0,
                     "3000 seeded graphs at n=12,14,16, " + std::to_string(bad) + " disagreements");
        }
        {
            Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
            std::uint64_t bad = 0;
            for (int i = 0; i < 1000; ++i) {
                const Graph g = random_doubled_graph(1 + rng.below(12), rng);
                const auto cert = is_doubled_oracle(g);
                if (!cert) {
                    ++bad;
                    continue;
                }
                try {
                    const auto ext = extend_to_double_split(g, *cert);
                    if (!(ext.h.induced(ext.embedding.map) == g)) ++bad;
                } catch (const std::exception&) {
                    ++bad;
                }
            }
            t.report("extend-to-double-split", bad == 0, "1000 seeded doubled graphs n<=12");
        }
    }

    std::cout << (t.failures == 0 ? "selfcheck OK" : "selfcheck FAILED") << "\n";
    return t.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying recognition and obstruction mining for split, almost-split and doubled graphs"};
    app.require_subcommand(1);

    std::string cls = "doubled", input = "-", format = "json";
    std::vector<std::string> inline_graphs;
    int jobs = 1, max_order = 9;
    bool full = false, corrupt_catalog = false;
    std::uint64_t seed = 20240601;

    auto* rec = app.add_subcommand("recognize", "recognize graphs given as graph6 lines");
    rec->add_option("--class", cls, "split|almost-split|doubled")
        ->check(CLI::IsMember({"split", "almost-split", "doubled"}));
    rec->add_option("--input", input, "graph6 file, one graph per line ('-' = stdin)");
    rec->add_option("--format", format, "json|tsv|human")->check(CLI::IsMember({"json", "tsv", "human"}));
    rec->add_option("--jobs", jobs, "worker threads (output order is preserved)");
    rec->add_option("graphs", inline_graphs, "inline graph6 strings");

    auto* mine = app.add_subcommand("mine", "mine minimal forbidden induced subgraphs");
    mine->add_option("--class", cls, "split|almost-split|doubled")
        ->check(CLI::IsMember({"split", "almost-split", "doubled"}));
    mine->add_option("--max-order", max_order, "largest order to scan");
    std::string mine_input;
    mine->add_option("--input", mine_input, "graph6 corpus instead of the built-in generator");

    auto* enumerate = app.add_subcommand("enumerate",
                                          "emit one graph6 line per isomorphism class, orders 0..N");
    int enum_max = 9;
    enumerate->add_option("--max-order", enum_max, "largest order to emit");

    auto* self = app.add_subcommand("selfcheck", "run the consistency sweeps");
    self->add_flag("--full", full, "include the n<=8 sweeps, family mining and sampled checks");
    self->add_option("--seed", seed, "seed for the sampled sweeps");
    self->add_flag("--corrupt-catalog", corrupt_catalog, "fault-injection hook for the test harness")
        ->group(""); // hidden

    auto* catalog = app.add_subcommand("catalog", "emit the named pattern catalog as TSV");

    auto* chk = app.add_subcommand("check-cert", "validate a certificate JSON against a graph");
    std::string chk_graph, chk_cert = "-";
    chk->add_option("graph", chk_graph, "graph6 string")->required();
    chk->add_option("--cert", chk_cert, "certificate JSON file ('-' = stdin)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rec->parsed()) return cmd_recognize(cls, inline_graphs, input, format, jobs);
        if (mine->parsed()) return cmd_mine(cls, max_order, mine_input);
        if (enumerate->parsed()) return cmd_enumerate(enum_max);
        if (self->parsed()) return cmd_selfcheck(full, seed, corrupt_catalog);
        if (catalog->parsed()) return cmd_catalog();
        if (chk->parsed()) return cmd_check_cert(chk_graph, chk_cert);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    log_note(1, "no subcommand executed");
    return 1;
}
