// specgraph command-line front end.
//
// Exit codes: 0 ok, 1 internal failure, 2 parse error or bad usage,
// 3 isolated vertex, 4 structural precondition, 5 size guard.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "specgraph/drawing.hpp"
#include "specgraph/error.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/laplacian.hpp"
#include "specgraph/ncut_k.hpp"
#include "specgraph/ncut_two.hpp"
#include "specgraph/oracle.hpp"

namespace sg = specgraph;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIsolated = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitSizeGuard = 5;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 12 significant digits, so output is stable across platforms.
double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Json number(double x) { return round12(x); }

Json vector_json(const sg::Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
    return out;
}

Json columns_json(const sg::Matrix& m) {
    Json out = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(vector_json(m.col(j)));
    return out;
}

Json rows_json(const sg::Matrix& m) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
    return out;
}

Json partition_json(const sg::Partition& p) {
    Json out = Json::array();
    const sg::Partition canonical = p.canonical();
    for (const auto& block : canonical.blocks()) out.push_back(block);
    return out;
}

sg::WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open graph file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return sg::parse_graph(text.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << text;
}

// The library's float printer is round-trip exact but not always shortest,
// so floats are re-printed with 12 significant digits.
std::string dump(const Json& j) {
    static const std::regex float_token(R"((-?\d+\.\d+(?:[eE][-+]?\d+)?|-?\d+[eE][-+]?\d+))");
    const std::string raw = j.dump(2);
    std::string out;
    auto last = raw.cbegin();
    for (std::sregex_iterator it(raw.begin(), raw.end(), float_token), end; it != end; ++it) {
        out.append(last, raw.cbegin() + it->position());
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", std::strtod(it->str().c_str(), nullptr));
        std::string token = buf;
        if (token.find_first_of(".e") == std::string::npos) token += ".0";
        out += token;
        last = raw.cbegin() + it->position() + it->length();
    }
    out.append(last, raw.cend());
    return out + "\n";
}

Json eigen_json(const sg::Vector& values, const sg::Matrix& vectors, std::size_t k) {
    const auto kk = static_cast<Eigen::Index>(k);
    return Json{{"values", vector_json(values.head(kk))}, {"vectors", columns_json(vectors.leftCols(kk))}};
}

struct SpectrumArgs {
    std::string graph;
    std::size_t k = 0;
    bool normalized = false;
};

int run_spectrum(const SpectrumArgs& a) {
    const auto g = load_graph(a.graph);
    const std::size_t k = a.k == 0 ? g.size() : a.k;
    if (k > g.size()) throw UsageError("--k exceeds the node count");
    const auto dec = sg::eigh(sg::laplacian(g));

    Json out;
    out["nodes"] = g.size();
    out["edges"] = g.edge_count();
    out["k"] = k;
    out["laplacian"] = eigen_json(dec.values, dec.vectors, k);
    if (a.normalized) {
        const auto bundle = sg::normalized_laplacians(g);
        const auto sym = sg::eigh(bundle.l_sym);
        const auto rw = sg::generalized_eigen(g);
        out["l_sym"] = eigen_json(sym.values, sym.vectors, k);
        out["l_rw"] = eigen_json(rw.values, rw.vectors, k);
    }
    emit(dump(out), "");
    return kExitOk;
}

struct DrawArgs {
    std::string graph;
    std::size_t dims = 2;
    std::string format = "json";
    std::string out;
};

int run_draw(const DrawArgs& a) {
    const auto g = load_graph(a.graph);
    if (a.format == "svg" && a.dims != 2) throw UsageError("SVG output needs --dims 2");
    const auto drawing = sg::spectral_drawing(g, a.dims);
    const auto coincident = drawing.coincident_vertices();
    for (const auto& [i, j] : coincident) {
        std::cerr << "warning: nodes " << i << " and " << j << " are drawn at the same point\n";
    }
    if (a.format == "svg") {
        emit(sg::to_svg(g, drawing), a.out);
        return kExitOk;
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, number(e.weight)}));
    Json pairs = Json::array();
    for (const auto& [i, j] : coincident) pairs.push_back(Json::array({i, j}));
    Json out;
    out["dims"] = a.dims;
    out["nodes"] = rows_json(drawing.coordinates());
    out["edges"] = std::move(edges);
    out["energy"] = number(sg::energy(g, drawing));
    out["eigenvalue_sum"] = number(sg::minimum_energy_lower_bound(g, a.dims));
    out["coincident"] = std::move(pairs);
    emit(dump(out), a.out);
    return kExitOk;
}

struct ClusterArgs {
    std::string graph;
    std::size_t k = 2;
    bool rescale = false;
    std::string repair = "reassign";
    int max_iter = 100;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    bool two_way = false;
    bool no_normalize = false;
};

int run_cluster(const ClusterArgs& a) {
    const auto g = load_graph(a.graph);
    Json out;
    if (a.two_way) {
        if (a.k != 2) throw UsageError("--two-way needs --k 2");
        const auto relaxed = sg::relax_two(g);
        const auto rounded = sg::round_two(g, relaxed.z);
        out["method"] = "two-way";
        out["partition"] = partition_json(rounded.partition);
        out["ncut"] = number(sg::ncut(g, rounded.partition));
        out["relaxed_bound"] = number(relaxed.nu2);
        out["iterations"] = rounded.distances.size();
        out["distance"] = number(rounded.distance);
        out["seed"] = a.seed;
        emit(dump(out), "");
        return kExitOk;
    }

    sg::ClusterOptions opts;
    opts.rescale = a.rescale;
    opts.normalize_columns = !a.no_normalize;
    opts.repair = a.repair == "shrink" ? sg::EmptyColumnRepair::Shrink : sg::EmptyColumnRepair::Reassign;
    opts.max_iter = a.max_iter;
    opts.tol = a.tol;
    const auto result = sg::cluster(g, a.k, opts);

    Json trace = Json::array();
    for (const auto& s : result.trace) {
        trace.push_back(Json{{"step", sg::to_string(s.kind)},
                             {"objective", number(s.objective)},
                             {"ncut", number(s.ncut)},
                             {"clusters", s.clusters}});
    }
    out["method"] = "k-way";
    out["k"] = a.k;
    out["clusters"] = result.partition.block_count();
    out["partition"] = partition_json(result.partition);
    out["ncut"] = number(result.ncut);
    out["relaxed_bound"] = number(result.relaxed.trace_value);
    out["objective"] = number(result.objective);
    out["iterations"] = result.iterations;
    out["converged"] = result.converged;
    out["seed"] = a.seed;
    out["trace"] = std::move(trace);
    emit(dump(out), "");
    return kExitOk;
}

struct OracleArgs {
    std::string graph;
    std::size_t k = 2;
    unsigned workers = 1;
};

int run_oracle(const OracleArgs& a) {
    const auto g = load_graph(a.graph);
    const auto r = sg::brute_ncut(g, a.k, a.workers);
    Json out;
    out["best_partition"] = partition_json(r.best_partition);
    out["value"] = number(r.best_value);
    out["count"] = r.evaluated_count;
    out["skipped"] = r.skipped_count;
    emit(dump(out), "");
    return kExitOk;
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
};

int run_gen(const GenArgs& a) {
    sg::WeightedGraph g = [&] {
        if (a.kind == "bucky") return sg::bucky();
        if (a.n == 0) throw UsageError("gen " + a.kind + " needs N");
        if (a.kind == "ring") return sg::ring(a.n);
        if (a.kind == "path") return sg::path(a.n);
        if (a.kind == "complete") return sg::complete(a.n);
        throw UsageError("unknown graph kind '" + a.kind + "' (ring, path, complete, bucky)");
    }();
    emit(sg::serialize_graph(g), "");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral graph analysis: Laplacian spectra, drawings and normalized-cut clustering"};
    app.require_subcommand(1);

    SpectrumArgs spectrum;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "Smallest eigenpairs of the graph Laplacians");
    cmd_spectrum->add_option("--graph", spectrum.graph, "Graph file")->required();
    cmd_spectrum->add_option("--k", spectrum.k, "Number of eigenpairs (default: all)");
    cmd_spectrum->add_flag("--normalized", spectrum.normalized, "Also report L_sym and L_rw");

    DrawArgs draw;
    auto* cmd_draw = app.add_subcommand("draw", "Minimum-energy spectral drawing");
    cmd_draw->add_option("--graph", draw.graph, "Graph file")->required();
    cmd_draw->add_option("--dims", draw.dims, "Embedding dimension")->required();
    cmd_draw->add_option("--format", draw.format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
    cmd_draw->add_option("--out", draw.out, "Output path (default: stdout)");

    ClusterArgs cl;
    auto* cmd_cluster = app.add_subcommand("cluster", "Normalized-cut clustering");
    cmd_cluster->add_option("--graph", cl.graph, "Graph file")->required();
    cmd_cluster->add_option("--k", cl.k, "Number of clusters")->required();
    cmd_cluster->add_flag("--rescale", cl.rescale, "Run the alternation on the column-rescaled relaxation");
    cmd_cluster->add_option("--repair", cl.repair, "Empty-column repair")->check(CLI::IsMember({"reassign", "shrink"}));
    cmd_cluster->add_option("--max-iter", cl.max_iter, "Alternation rounds")->check(CLI::PositiveNumber);
    cmd_cluster->add_option("--tol", cl.tol, "Stop when the objective improves by less than this");
    cmd_cluster->add_option("--seed", cl.seed, "Recorded in the output");
    cmd_cluster->add_flag("--two-way", cl.two_way, "Use the 2-way rounding instead of the alternation");
    cmd_cluster->add_flag("--no-normalize", cl.no_normalize, "Keep unit entries in the discrete columns");

    OracleArgs oracle;
    auto* cmd_oracle = app.add_subcommand("oracle", "Exhaustive minimum normalized cut");
    cmd_oracle->add_option("--graph", oracle.graph, "Graph file")->required();
    cmd_oracle->add_option("--k", oracle.k, "Number of clusters")->required();
    cmd_oracle->add_option("--workers", oracle.workers, "Threads")->check(CLI::Range(1U, 64U));

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "Write a generated graph");
    cmd_gen->add_option("kind", gen.kind, "ring, path, complete or bucky")->required();
    cmd_gen->add_option("n", gen.n, "Node count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_spectrum) return run_spectrum(spectrum);
        if (*cmd_draw) return run_draw(draw);
        if (*cmd_cluster) return run_cluster(cl);
        if (*cmd_oracle) return run_oracle(oracle);
        if (*cmd_gen) return run_gen(gen);
    } catch (const sg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sg::IsolatedVertexError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIsolated;
    } catch (const sg::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const sg::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const sg::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
