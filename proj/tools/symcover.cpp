// symcover command-line tool.
//
// Exit status: 0 success, 1 domain or parse error, 2 property-suite failure.

#include <symcover/symcover.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace symcover;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_suite = 2;

unsigned default_threads() {
    if (const char* env = std::getenv("SYMCOVER_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) {
                return static_cast<unsigned>(v);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Rounds to 12 significant digits so JSON numbers match the text outputs.
double sig12(double v) { return std::strtod(io::format_sig(v, 12).c_str(), nullptr); }

std::vector<double> sig12(std::vector<double> v) {
    for (double& x : v) x = sig12(x);
    return v;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write " + path);
    }
    out << text;
}

// ---- canonization methods ----

struct Method {
    std::string name;
    unsigned order = 8;
};

Method parse_method(const std::string& text) {
    Method m;
    const auto colon = text.find(':');
    m.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        if (m.name != "hilbert") {
            throw DomainError("method '" + m.name + "' takes no parameter");
        }
        try {
            m.order = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        } catch (const std::exception&) {
            throw DomainError("bad curve order in '" + text + "'");
        }
    }
    static const std::set<std::string> known = {"none", "sort", "lexsort", "hilbert", "centralize", "pca-skew"};
    if (!known.count(m.name)) {
        throw DomainError("unknown canonization method '" + m.name + "'");
    }
    return m;
}

json group_record(const Method& method, const CanonResult& r) {
    json j;
    j["method"] = method.name;
    if (method.name == "hilbert") {
        j["order"] = method.order;
    }
    if (!r.perm.empty()) j["perm"] = r.perm;
    if (!r.signs.empty()) j["signs"] = r.signs;
    if (!r.shift.empty()) j["shift"] = r.shift;
    return j;
}

/// Canonizes a cloud; for pca-skew the sidecar gets the frame and shift.
std::pair<PointCloud, json> canonize_cloud(const PointCloud& x, const Method& method) {
    if (method.name == "none") {
        return {x, json{{"method", "none"}}};
    }
    if (method.name == "pca-skew") {
        auto r = canon_pca_skew(x);
        json j;
        j["method"] = "pca-skew";
        j["shift"] = r.shift;
        json frame = json::array();
        for (std::size_t i = 0; i < r.frame.n; ++i) {
            std::vector<double> row;
            for (std::size_t k = 0; k < r.frame.n; ++k) row.push_back(r.frame(i, k));
            frame.push_back(row);
        }
        j["frame"] = frame;
        j["variances"] = r.variances;
        r.cloud.set_label(x.label());
        return {r.cloud, j};
    }
    CanonResult r;
    if (method.name == "sort") {
        r = canon_sort(x);
    } else if (method.name == "lexsort") {
        r = canon_lexsort(x);
    } else if (method.name == "hilbert") {
        if (!x.in_unit_cube()) {
            throw DomainError("hilbert canonization needs all coordinates in [0, 1]");
        }
        r = canon_hilbert(x, method.order);
    } else if (method.name == "centralize") {
        r = canon_centralize(x);
    }
    r.cloud.set_label(x.label());
    return {r.cloud, group_record(method, r)};
}

// ---- subcommands ----

int cmd_canonize(const std::string& input, const std::string& method_text, const std::string& output) {
    const Method method = parse_method(method_text);
    std::ifstream in(input);
    if (!in) {
        throw DomainError("cannot open " + input);
    }
    const auto rows = io::read_csv_rows(in, input);

    // A single-row file under `sort` is read as a vector of scalars and written back as one row.
    const bool flat_row = method.name == "sort" && rows.size() == 1 && rows.front().size() > 1;
    const PointCloud x = flat_row ? PointCloud::from_vector(rows.front()) : io::cloud_from_point_rows(rows);
    if (method.name == "sort" && x.dim() != 1) {
        throw DomainError("sort expects a single row or a single column of values");
    }

    auto [cloud, record] = canonize_cloud(x, method);
    std::ostringstream body;
    if (flat_row) {
        for (std::size_t j = 0; j < cloud.size(); ++j) {
            body << (j ? "," : "") << io::format_double(cloud(0, j));
        }
        body << '\n';
    } else {
        io::write_cloud_csv(body, cloud);
    }
    write_text(output, body.str());
    if (!output.empty() && output != "-") {
        write_text(output + ".group.json", record.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_dist(const std::string& a, const std::string& b, const std::string& metric_text) {
    const MetricKind metric = MetricKind::parse(metric_text);
    const auto x = io::read_cloud_csv(a);
    const auto y = io::read_cloud_csv(b);
    std::cout << io::format_sig(distance(metric, x, y), 12) << '\n';
    return exit_ok;
}

struct CoverageOptions {
    std::string train, test, output = "-", format = "json";
    std::vector<std::string> metrics;
    std::string canon = "none";
    bool same_label = false;
    bool sweep = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t sample_n = 0;
    bool shift_positive = false;
    bool divide_max_axis = false;
};

Dataset canonize_dataset(const Dataset& ds, const Method& method) {
    Dataset out = ds;
    for (auto& x : out.items) {
        x = canonize_cloud(x, method).first;
    }
    return out;
}

int cmd_coverage(const CoverageOptions& opt) {
    std::optional<io::Normalization> norm;
    if (opt.sample_n > 0 || opt.shift_positive || opt.divide_max_axis) {
        norm = io::Normalization{opt.sample_n, opt.shift_positive, opt.divide_max_axis};
    }
    const Dataset train = io::load_dataset(opt.train, opt.seed, norm);
    // Offset the test seed so train and test subsampling differ for identical files.
    const Dataset test = io::load_dataset(opt.test, opt.seed + 0x9e3779b97f4a7c15ull, norm);

    struct Row {
        std::string label;
        Method canon;
        MetricKind metric;
    };
    std::vector<Row> plan;
    if (opt.sweep) {
        plan = {{"euclidean", parse_method("none"), MetricKind::mean_euclidean()},
                {"lexsort", parse_method("lexsort"), MetricKind::mean_euclidean()},
                {"hilbert", parse_method(opt.canon.rfind("hilbert", 0) == 0 ? opt.canon : "hilbert"),
                 MetricKind::mean_euclidean()},
                {"group", parse_method("none"), MetricKind::perm_sum()}};
    } else {
        const Method canon = parse_method(opt.canon);
        const std::vector<std::string> metrics = opt.metrics.empty() ? std::vector<std::string>{"mean-euclidean"} : opt.metrics;
        for (const auto& m : metrics) {
            plan.push_back({m, canon, MetricKind::parse(m)});
        }
    }

    json report;
    report["train"] = opt.train;
    report["test"] = opt.test;
    report["seed"] = opt.seed;
    report["same_label"] = opt.same_label;
    report["internal_centers"] = true;
    report["rows"] = json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "row,canon,metric,mean_coverage,max_coverage\n";
    text << "row         canon        metric             mean coverage    max coverage\n";

    for (const auto& row : plan) {
        const auto tr = canonize_dataset(train, row.canon);
        const auto te = canonize_dataset(test, row.canon);
        const auto rep = coverage(tr, te, row.metric, opt.same_label, opt.threads);
        std::string canon_id = row.canon.name;
        if (row.canon.name == "hilbert") canon_id += ":" + std::to_string(row.canon.order);
        json jr;
        jr["row"] = row.label;
        jr["canon"] = canon_id;
        jr["metric"] = rep.metric.to_string();
        jr["mean_coverage"] = sig12(rep.mean_coverage);
        jr["max_coverage"] = sig12(rep.max_coverage);
        jr["q"] = sig12(rep.q);
        jr["nearest"] = rep.nearest;
        report["rows"].push_back(jr);
        csv << row.label << ',' << canon_id << ',' << rep.metric.to_string() << ',' << io::format_sig(rep.mean_coverage)
            << ',' << io::format_sig(rep.max_coverage) << '\n';
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-11s %-12s %-18s %-16s %s\n", row.label.c_str(), canon_id.c_str(),
                      rep.metric.to_string().c_str(), io::format_sig(rep.mean_coverage).c_str(),
                      io::format_sig(rep.max_coverage).c_str());
        text << buf;
    }

    if (opt.format == "json") {
        write_text(opt.output, report.dump(2) + "\n");
    } else if (opt.format == "csv") {
        write_text(opt.output, csv.str());
    } else {
        write_text(opt.output, text.str());
    }
    return exit_ok;
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item, &used);
            if (used != item.size() || v == 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("bad point count '" + item + "' in --n");
        }
    }
    if (out.empty()) {
        throw DomainError("--n needs at least one value");
    }
    return out;
}

json log_value_json(const bounds::LogValue& v) {
    json j;
    j["formula"] = v.formula_id;
    j["scientific"] = v.scientific(2);
    j["log10"] = sig12(v.log10);
    if (v.exact && v.exact->str().size() <= 4096) {
        j["exact"] = v.exact->str();
    }
    return j;
}

int cmd_bounds(const std::string& n_text, std::uint64_t d, const std::string& eps_text, const std::string& m_text,
               const std::string& format, const std::string& output) {
    const auto ns = parse_n_list(n_text);
    const auto eps = bounds::Epsilon::parse(eps_text);
    std::optional<unsigned> order;
    if (m_text != "inf") {
        try {
            order = static_cast<unsigned>(std::stoul(m_text));
        } catch (const std::exception&) {
            throw DomainError("--m must be a positive integer or 'inf'");
        }
    }
    const auto rows = bounds::bounds_table(ns, d, eps, order);
    const std::string m_label = order ? std::to_string(*order) : "inf";

    std::ostringstream out;
    if (format == "json") {
        json j;
        j["d"] = d;
        j["epsilon"] = eps.to_string();
        j["m"] = m_label;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            j["rows"].push_back({{"n", r.n},
                                 {"quotient", log_value_json(r.quotient)},
                                 {"hilbert", log_value_json(r.hilbert)},
                                 {"lexsort", log_value_json(r.lexsort)},
                                 {"hypercube", log_value_json(r.hypercube)}});
        }
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "n,quotient_upper,hilbert_upper,lexsort_lower,hypercube_exact\n";
        for (const auto& r : rows) {
            out << r.n << ',' << r.quotient.scientific() << ',' << r.hilbert.scientific() << ','
                << r.lexsort.scientific() << ',' << r.hypercube.scientific() << '\n';
        }
    } else {
        out << "Covering-number bounds, d=" << d << ", eps=" << eps.to_string() << ", m=" << m_label << "\n";
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-22s", "");
        out << buf;
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%12s", ("n=" + std::to_string(r.n)).c_str());
            out << buf;
        }
        out << '\n';
        auto line = [&](const char* name, auto get) {
            std::snprintf(buf, sizeof buf, "%-22s", name);
            out << buf;
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%12s", get(r).scientific().c_str());
                out << buf;
            }
            out << '\n';
        };
        line("Quotient (upper)", [](const bounds::BoundsRow& r) { return r.quotient; });
        line("Hilbert (upper)", [](const bounds::BoundsRow& r) { return r.hilbert; });
        line("Lexsort (lower)", [](const bounds::BoundsRow& r) { return r.lexsort; });
        line("Hypercube (exact)", [](const bounds::BoundsRow& r) { return r.hypercube; });
    }
    write_text(output, out.str());
    return exit_ok;
}

int cmd_gen(const synth::ClusterConfig& cfg, const std::string& out_dir) {
    const auto data = synth::make_clusters(cfg);
    const fs::path root(out_dir);
    fs::create_directories(root / "clouds");
    auto dump = [&](const Dataset& ds, const std::string& split) {
        io::Manifest m;
        for (std::size_t i = 0; i < ds.items.size(); ++i) {
            const std::string rel = "clouds/" + split + "_" + std::to_string(i) + ".csv";
            io::write_cloud_csv(root / rel, ds.items[i]);
            m.entries.push_back({rel, ds.items[i].label()});
        }
        io::write_manifest(root / (split + ".jsonl"), m);
    };
    dump(data.train, "train");
    if (!data.test.items.empty()) {
        dump(data.test, "test");
    }
    std::cout << "wrote " << data.train.items.size() << " train and " << data.test.items.size() << " test clouds to "
              << root.string() << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& format) {
    const auto results = verify::run(suite, seed);
    bool all = true;
    json j = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (format == "json") {
            j.push_back({{"suite", r.suite}, {"property", r.property}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.property << "  " << r.detail << '\n';
        }
    }
    if (format == "json") {
        std::cout << j.dump(2) << '\n';
    }
    return all ? exit_ok : exit_suite;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcover: canonizations, quotient metrics, coverage and covering-number bounds"};
    app.require_subcommand(1);

    // canonize
    std::string can_in, can_method, can_out = "-";
    auto* canonize = app.add_subcommand("canonize", "Canonize a point-cloud CSV");
    canonize->add_option("input", can_in, "Input CSV (one point per row)")->required();
    canonize->add_option("-m,--method", can_method, "sort | lexsort | hilbert[:m] | centralize | pca-skew")->required();
    canonize->add_option("-o,--output", can_out, "Output CSV ('-' for stdout); a .group.json sidecar is written next to it");

    // dist
    std::string dist_a, dist_b, dist_metric = "mean-euclidean";
    auto* dist = app.add_subcommand("dist", "Distance between two point-cloud CSVs");
    dist->add_option("a", dist_a)->required();
    dist->add_option("b", dist_b)->required();
    dist->add_option("--metric", dist_metric,
                     "inf | frobenius | l1 | mean-euclidean | wasserstein-1d:P | perm-sum | perm-bottleneck | "
                     "sign:BASE | translation");

    // coverage
    CoverageOptions cov;
    cov.threads = default_threads();
    auto* coverage_cmd = app.add_subcommand("coverage", "Mean and max coverage of a test manifest by a train manifest");
    coverage_cmd->add_option("--train", cov.train)->required();
    coverage_cmd->add_option("--test", cov.test)->required();
    coverage_cmd->add_option("--metric", cov.metrics, "Metric(s); one report row per metric");
    coverage_cmd->add_option("--canon", cov.canon, "Canonize both sets first: none | sort | lexsort | hilbert[:m] | centralize | pca-skew");
    coverage_cmd->add_flag("--same-label", cov.same_label, "Only compare items with equal labels");
    coverage_cmd->add_flag("--sweep", cov.sweep, "Four rows: euclidean, lexsort, hilbert, group distance");
    coverage_cmd->add_option("--seed", cov.seed);
    coverage_cmd->add_option("--threads", cov.threads, "Worker threads (default: $SYMCOVER_THREADS or all cores)");
    coverage_cmd->add_option("--sample-n", cov.sample_n, "Subsample this many points per cloud");
    coverage_cmd->add_flag("--shift-positive", cov.shift_positive);
    coverage_cmd->add_flag("--divide-max-axis", cov.divide_max_axis);
    coverage_cmd->add_option("--format", cov.format)->check(CLI::IsMember({"json", "csv", "text"}));
    coverage_cmd->add_option("-o,--output", cov.output);

    // bounds
    std::string b_n = "250,500,750,1000,2000", b_eps = "1/6", b_m = std::to_string(verify::reference_table_order);
    std::string b_format = "text", b_out = "-";
    std::uint64_t b_d = 3;
    auto* bounds_cmd = app.add_subcommand("bounds", "Covering-number bounds table");
    bounds_cmd->add_option("--n", b_n, "Comma-separated point counts");
    bounds_cmd->add_option("--d", b_d, "Point dimension");
    bounds_cmd->add_option("--eps", b_eps, "Epsilon as p/q or a decimal");
    bounds_cmd->add_option("--m", b_m, "Hilbert curve order, or 'inf' for the limit");
    bounds_cmd->add_option("--format", b_format)->check(CLI::IsMember({"json", "csv", "text"}));
    bounds_cmd->add_option("-o,--output", b_out);

    // gen
    synth::ClusterConfig gen_cfg;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic clustered dataset");
    gen->add_option("--clusters", gen_cfg.clusters)->check(CLI::PositiveNumber);
    gen->add_option("--per-cluster", gen_cfg.train_per_cluster, "Train items per cluster");
    gen->add_option("--test-per-cluster", gen_cfg.test_per_cluster, "Test items per cluster");
    gen->add_option("--train", gen_cfg.train_total, "Total train items, spread over clusters (overrides --per-cluster)");
    gen->add_option("--test", gen_cfg.test_total, "Total test items (overrides --test-per-cluster)");
    gen->add_option("--d", gen_cfg.dim)->check(CLI::PositiveNumber);
    gen->add_option("--n", gen_cfg.points, "Points per cloud")->check(CLI::PositiveNumber);
    gen->add_option("--sigma", gen_cfg.sigma);
    gen->add_option("--seed", gen_cfg.seed);
    gen->add_option("-o,--out", gen_out, "Output directory")->required();

    // verify
    std::string v_suite = "all", v_format = "text";
    std::uint64_t v_seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
    verify_cmd->add_option("--suite", v_suite,
                           "all | hilbert | isometry | poor-c1 | canon | assignment | lower-bound | combinatorics | "
                           "bounds | coverage");
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--format", v_format)->check(CLI::IsMember({"json", "text"}));

    // rhs
    bounds::GeneralizationInputs rhs_in;
    auto* rhs = app.add_subcommand("rhs", "Evaluate the covering-number generalization bound");
    rhs->add_option("--cl", rhs_in.lipschitz_loss);
    rhs->add_option("--ch", rhs_in.lipschitz_hypothesis);
    rhs->add_option("--cf", rhs_in.lipschitz_target);
    rhs->add_option("--eps", rhs_in.epsilon);
    rhs->add_option("--M", rhs_in.loss_bound);
    rhs->add_option("--N", rhs_in.covering_number, "Covering number");
    rhs->add_option("--delta", rhs_in.delta);
    rhs->add_option("--samples", rhs_in.samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_domain;
    }

    try {
        if (*canonize) return cmd_canonize(can_in, can_method, can_out);
        if (*dist) return cmd_dist(dist_a, dist_b, dist_metric);
        if (*coverage_cmd) return cmd_coverage(cov);
        if (*bounds_cmd) return cmd_bounds(b_n, b_d, b_eps, b_m, b_format, b_out);
        if (*gen) return cmd_gen(gen_cfg, gen_out);
        if (*verify_cmd) return cmd_verify(v_suite, v_seed, v_format);
        if (*rhs) {
            std::cout << io::format_sig(bounds::generalization_rhs(rhs_in), 12) << '\n';
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "symcover: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}
