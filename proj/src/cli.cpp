#include "projlab/cli.hpp"

#include "projlab/core.hpp"
#include "projlab/entropy.hpp"
#include "projlab/errors.hpp"
#include "projlab/incidence.hpp"
#include "projlab/io.hpp"
#include "projlab/parallel.hpp"
#include "projlab/pointsets.hpp"
#include "projlab/projections.hpp"
#include "projlab/record.hpp"
#include "projlab/sharpness.hpp"

#include <CLI11.hpp>
#include <glob.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace projlab {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int env_jobs() {
    const char* env = std::getenv("PROJLAB_JOBS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw InvalidParameter("PROJLAB_JOBS must be a positive integer");
    return static_cast<int>(v);
}

struct Common {
    int jobs = 0;
    std::string out;
};

class Emitter {
public:
    Emitter(std::ostream& out, const Common& common) : out_(out), common_(common) {}

    void text(const std::string& body) const {
        if (common_.out.empty()) {
            out_ << body;
        } else {
            save_text(common_.out, body);
        }
    }

    // Emits the record; returns the exit code implied by its hard assertions.
    int record(const ExperimentRecord& rec, std::ostream& err) const {
        text(dump(rec.to_json()));
        if (auto failure = rec.first_failure()) {
            err << "assertion failed: " << failure->name << "\n";
            return kExitAssertion;
        }
        return kExitOk;
    }

private:
    std::ostream& out_;
    const Common& common_;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--jobs", common.jobs, "worker threads (default: PROJLAB_JOBS or 1)")->check(CLI::Range(1, 1024));
    cmd->add_option("--out", common.out, "write output to this file instead of stdout");
}

int jobs_of(const Common& c) { return c.jobs > 0 ? c.jobs : env_jobs(); }

ParamTriple triple(int log2delta, const std::string& s, int log2r) {
    return ParamTriple(log2delta, parse_rational(s), log2r);
}

double log_inverse_delta(const ParamTriple& p) { return p.log2delta() * std::log(2.0); }

// ---- gen ----

struct GenArgs {
    Common common;
    std::string shape;
    std::optional<int> n;
    int level = 0;
    int log2delta = 0;
    std::string s;
    int log2r = 0;
    std::string format = "pset";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    LatticePointSet set;
    json summary;
    summary["shape"] = a.shape;
    if (a.shape == "segment") {
        if (!a.n) throw InvalidParameter("segment needs --n");
        set = gen_segment(Scale(*a.n));
    } else if (a.shape == "fourcorners") {
        set = gen_four_corners(a.level, Scale(a.n.value_or(2 * a.level)));
        summary["fourcorners_level"] = a.level;
    } else {
        const auto params = triple(a.log2delta, a.s, a.log2r);
        const auto g = gen_grid_example(params);
        summary["m"] = g.m;
        summary["n_g"] = g.n_g;
        summary["h_steps"] = g.h_steps;
        set = g.set;
    }
    summary["level"] = set.scale().n();
    summary["count"] = set.size();
    summary["format"] = a.format;
    summary["out"] = a.common.out;
    save_text(a.common.out, a.format == "dmeas" ? format_measure(from_pointset(set)) : format_pointset(set));
    out << summary.dump() << "\n";
    return kExitOk;
}

// ---- project ----

struct ProjectArgs {
    Common common;
    std::string in;
    std::string theta = "0";
    std::optional<std::int64_t> grid;
};

int cmd_project(const ProjectArgs& a, std::ostream& out) {
    const auto set = load_pointset(a.in);
    const Emitter emit(out, a.common);
    if (a.grid) {
        const auto dirs = direction_grid(*a.grid);
        std::vector<std::int64_t> counts(dirs.size());
        parallel_for(dirs.size(), jobs_of(a.common), [&](std::size_t i) {
            thread_local std::vector<double> scratch;
            counts[i] = projected_covering_number(set, dirs[i], scratch);
        });
        std::string csv = "theta,covering_number\n";
        char buf[64];
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", dirs[i].theta());
            csv += std::string(buf) + "," + std::to_string(counts[i]) + "\n";
        }
        emit.text(csv);
        return kExitOk;
    }
    const auto prof = project(set, Direction(parse_angle(a.theta)));
    json j;
    j["name"] = "project";
    j["theta"] = prof.direction.theta();
    j["delta"] = set.scale().delta();
    j["n_points"] = set.size();
    j["covering_number"] = prof.covering_number;
    emit.text(dump(j));
    return kExitOk;
}

// ---- esets ----

struct EsetsArgs {
    Common common;
    std::string in;
    std::optional<int> log2delta;
    std::string s;
    std::optional<int> log2r;
    std::optional<std::int64_t> sweep;
    bool csv = false;
};

int cmd_esets(const EsetsArgs& a, std::ostream& out, std::ostream& err) {
    const auto set = load_pointset(a.in);
    const int n = a.log2delta.value_or(set.scale().n());
    const auto params = triple(n, a.s, a.log2r.value_or(n));
    const auto sweep = a.sweep.value_or(default_sweep(params.scale()));
    if (sweep < 1) throw InvalidParameter("--sweep must be positive");
    const auto es = compute_E_s(set, params, sweep, jobs_of(a.common));
    const Emitter emit(out, a.common);
    if (a.csv) {
        emit.text(es_sweep_csv(es));
        return kExitOk;
    }
    const auto covering = covering_number_directions(es, params.r());
    const double bound = kaufman_type_bound(params);
    const double ratio = static_cast<double>(covering) / bound;
    ExperimentRecord rec("esets");
    rec.param("delta", params.delta());
    rec.param("s", format_rational(params.s()));
    rec.param("r", params.r());
    rec.param("sweep", sweep);
    rec.result("n_points", set.size());
    rec.result("n_members", es.members.size());
    rec.result("covering_number", covering);
    rec.result("threshold", params.threshold());
    rec.result("ratio_to_threshold", static_cast<double>(covering) / params.threshold());
    rec.result("kaufman_bound", bound);
    rec.result("kaufman_ratio", ratio);
    rec.report_upper("kaufman_ratio_upper", ratio, kIncidenceBoundConstant * log_inverse_delta(params));
    rec.report_lower("kaufman_ratio_lower", ratio, 1.0 / kIncidenceBoundConstant);
    return emit.record(rec, err);
}

// ---- incidence ----

struct IncidenceArgs {
    Common common;
    std::string in;
    std::optional<int> log2delta;
    std::string s;
    std::optional<int> log2r;
    std::optional<std::int64_t> sweep;
    std::optional<double> extract;
};

int cmd_incidence(const IncidenceArgs& a, std::ostream& out, std::ostream& err) {
    auto set = load_pointset(a.in);
    const int n = a.log2delta.value_or(set.scale().n());
    const auto params = triple(n, a.s, a.log2r.value_or(n));
    const int jobs = jobs_of(a.common);
    std::optional<FrostmanReport> frostman;
    if (a.extract) {
        auto extracted = extract_delta_one_set(set, *a.extract);
        set = std::move(extracted.set);
        frostman = extracted.report;
    }
    const auto es = compute_E_s(set, params, a.sweep.value_or(default_sweep(params.scale())), jobs);
    const auto directions = separated_subset(es.members, params.r());
    if (directions.empty()) throw InvalidParameter("E_s is empty for these parameters");
    const auto tubes = build_tubes(set, directions, jobs);
    auto rec = upper_bound_report(set, tubes, params, a.extract.has_value(), jobs);
    rec.param("sweep", es.sweep_size);
    rec.result("n_sweep_members", es.members.size());
    if (frostman) {
        rec.param("capacity_constant", *a.extract);
        rec.result("frostman_max_ratio", frostman->max_ratio);
    }
    return Emitter(out, a.common).record(rec, err);
}

// ---- sharpness ----

struct SharpnessArgs {
    Common common;
    int log2delta = 0;
    std::string s;
    int log2r = 0;
    bool exploratory = false;
    bool csv = false;
    bool no_covering = false;
};

int cmd_sharpness(const SharpnessArgs& a, std::ostream& out, std::ostream& err) {
    const auto params = triple(a.log2delta, a.s, a.log2r);
    SharpnessOptions opt;
    opt.exploratory = a.exploratory;
    opt.covering = !a.no_covering;
    opt.jobs = jobs_of(a.common);
    const auto report = run_sharpness(params, opt);
    const Emitter emit(out, a.common);
    const auto rec = sharpness_record(params, report, opt);
    if (a.csv) {
        emit.text(sharpness_csv(report));
        if (auto failure = rec.first_failure()) {
            err << "assertion failed: " << failure->name << "\n";
            return kExitAssertion;
        }
        return kExitOk;
    }
    return emit.record(rec, err);
}

// ---- entropy ----

struct EntropyArgs {
    Common common;
    std::string in;
    std::optional<int> m;
    std::optional<int> fine;
    std::optional<int> coarse;
    std::string theta = "0";
    std::vector<double> s_values{0.5, 0.75};
    std::vector<int> m_list;
    std::optional<double> A;
    double tolerance = 0.02;
    double s = 0.5;
    int k = 0;
    std::int64_t qi = 0;
    std::int64_t qj = 0;
};

int cmd_entropy(const std::string& sub, const EntropyArgs& a, std::ostream& out, std::ostream& err) {
    const auto mu = load_measure(a.in);
    const Emitter emit(out, a.common);
    const int jobs = jobs_of(a.common);
    if (sub == "H") {
        const int m = a.m.value_or(mu.level());
        const auto v = entropy(mu, m);
        ExperimentRecord rec("entropy");
        rec.param("m", m);
        rec.param("n", mu.level());
        rec.param("d", mu.dim());
        rec.result("raw", v.raw);
        rec.result("normalized", v.normalized);
        return emit.record(rec, err);
    }
    if (sub == "cef") {
        const int fine = a.fine.value_or(mu.level());
        const int coarse = a.coarse.value_or(0);
        const auto ce = conditional_entropy(mu, fine, coarse);
        ExperimentRecord rec("cef");
        rec.param("fine", fine);
        rec.param("coarse", coarse);
        rec.result("direct", ce.direct);
        rec.result("difference", ce.difference);
        const double gap = std::fabs(ce.direct - ce.difference);
        rec.require("conditional_entropy_formula", gap <= kConditionalTolerance, gap, kConditionalTolerance);
        return emit.record(rec, err);
    }
    if (sub == "multiscale") {
        if (!a.m) throw InvalidParameter("multiscale needs --m");
        return emit.record(multiscale_check(mu, Direction(parse_angle(a.theta)), *a.m), err);
    }
    if (sub == "marstrand") {
        if (!a.m_list.empty()) return emit.record(marstrand_sweep(mu, a.m_list, a.tolerance, jobs), err);
        if (!a.m) throw InvalidParameter("marstrand needs --m or --mlist");
        return emit.record(marstrand_average(mu, *a.m, a.s_values, a.A, jobs), err);
    }
    if (sub == "cover") return emit.record(covering_from_entropy(mu, a.s), err);
    // blowup
    emit.text(format_measure(blow_up(mu, a.k, a.qi, a.qj)));
    return kExitOk;
}

// ---- adreg ----

struct AdregArgs {
    Common common;
    std::string in;
    std::optional<int> level;
    std::vector<std::int64_t> plist{2, 4, 8, 32};
    double s = 0.75;
    bool csv = false;
};

int cmd_adreg(const AdregArgs& a, std::ostream& out, std::ostream& err) {
    const Emitter emit(out, a.common);
    if (a.level) {
        if (a.csv) {
            const auto res = theorem_main2_values(*a.level, a.plist, a.s, jobs_of(a.common));
            std::string csv = "p,average,ratio\n";
            char buf[96];
            for (const auto& row : res.rows) {
                std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g\n", static_cast<long long>(row.p), row.average,
                              row.ratio);
                csv += buf;
            }
            emit.text(csv);
            return kExitOk;
        }
        return emit.record(theorem_main2_experiment(*a.level, a.plist, a.s, jobs_of(a.common)), err);
    }
    if (a.in.empty()) throw InvalidParameter("adreg needs --in or --level");
    const bool is_pset = load_text(a.in).rfind("PSET", 0) == 0;
    const auto mu = is_pset ? from_pointset(load_pointset(a.in)) : load_measure(a.in);
    const auto rep = ad_regularity_check(mu);
    ExperimentRecord rec("adreg");
    rec.param("n", mu.level());
    rec.result("A_lower", rep.A_lower);
    rec.result("A_upper", rep.A_upper);
    rec.result("A", rep.A);
    rec.result("diameter", rep.diameter);
    rec.result("occupied_counts", rep.occupied_counts);
    rec.report_upper("regularity_constant", rep.A, kRegularityAlarm);
    return emit.record(rec, err);
}

// ---- report ----

std::vector<std::string> expand_globs(const std::vector<std::string>& patterns) {
    std::set<std::string> files;
    for (const auto& pat : patterns) {
        glob_t g{};
        const int rc = ::glob(pat.c_str(), 0, nullptr, &g);
        if (rc == 0) {
            for (std::size_t i = 0; i < g.gl_pathc; ++i) files.insert(g.gl_pathv[i]);
        }
        globfree(&g);
        if (rc == GLOB_NOMATCH) throw std::runtime_error("no records match " + pat);
        if (rc != 0 && rc != GLOB_NOMATCH) throw std::runtime_error("cannot expand " + pat);
    }
    return {files.begin(), files.end()};
}

int cmd_report(const std::vector<std::string>& patterns, const Common& common, std::ostream& out) {
    std::vector<std::string> texts;
    for (const auto& path : expand_globs(patterns)) texts.push_back(load_text(path));
    Emitter(out, common).text(records_to_csv(texts));
    return kExitOk;
}

void flatten(const std::string& prefix, const json& j, std::map<std::string, std::string>& row) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(prefix.empty() ? k : prefix + "." + k, v, row);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(prefix + "." + std::to_string(i), j[i], row);
    } else if (j.is_string()) {
        row[prefix] = j.get<std::string>();
    } else if (j.is_null()) {
        row[prefix] = "";
    } else {
        row[prefix] = j.dump();
    }
}

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string q = "\"";
    for (char c : v) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

std::string records_to_csv(const std::vector<std::string>& json_texts) {
    std::vector<std::map<std::string, std::string>> rows;
    std::set<std::string> columns;
    for (std::size_t t = 0; t < json_texts.size(); ++t) {
        json doc;
        try {
            doc = json::parse(json_texts[t]);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("record ") + std::to_string(t + 1) + ": " + e.what(), 1);
        }
        std::vector<json> records;
        if (doc.is_array()) {
            records.assign(doc.begin(), doc.end());
        } else {
            records.push_back(doc);
        }
        for (const auto& rec : records) {
            if (!rec.is_object()) throw ParseError("record is not a JSON object", 1);
            std::map<std::string, std::string> row;
            for (const auto& [k, v] : rec.items()) {
                if (k == "assertions" && v.is_array()) {
                    for (const auto& entry : v) {
                        const auto name = entry.value("name", std::string("?"));
                        for (const auto& [field, value] : entry.items()) {
                            if (field != "name") flatten("assert." + name + "." + field, value, row);
                        }
                    }
                } else {
                    flatten(k, v, row);
                }
            }
            for (const auto& [k, v] : row) columns.insert(k);
            rows.push_back(std::move(row));
        }
    }
    std::string out;
    bool first = true;
    for (const auto& c : columns) {
        out += (first ? "" : ",") + csv_field(c);
        first = false;
    }
    out += "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& c : columns) {
            auto it = row.find(c);
            out += (first ? "" : ",") + (it == row.end() ? std::string() : csv_field(it->second));
            first = false;
        }
        out += "\n";
    }
    return out;
}

double parse_angle(const std::string& text) {
    const auto pos = text.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(text, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("bad angle '" + text + "'");
        }
        if (used != text.size() || !std::isfinite(v)) throw InvalidParameter("bad angle '" + text + "'");
        return v;
    }
    const std::string head = text.substr(0, pos);
    const std::string tail = text.substr(pos + 2);
    Rational factor = head.empty() ? Rational(1) : parse_rational(head);
    if (!tail.empty()) {
        if (tail[0] != '/') throw InvalidParameter("bad angle '" + text + "'");
        factor /= parse_rational(tail.substr(1));
    }
    return boost::rational_cast<double>(factor) * kPi;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"projlab: discretized projection experiments"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a point set");
    add_common(gen, gen_args.common);
    gen->get_option("--out")->required();
    gen->add_option("--shape", gen_args.shape)->required()->check(CLI::IsMember({"segment", "fourcorners", "grid3"}));
    gen->add_option("--n", gen_args.n, "lattice level (delta = 2^-n)");
    gen->add_option("--level", gen_args.level, "four-corners level L")->check(CLI::Range(0, 31));
    gen->add_option("--log2delta", gen_args.log2delta);
    gen->add_option("--s", gen_args.s);
    gen->add_option("--log2r", gen_args.log2r);
    gen->add_option("--format", gen_args.format)->check(CLI::IsMember({"pset", "dmeas"}));

    ProjectArgs project_args;
    auto* proj = app.add_subcommand("project", "covering numbers of projections");
    add_common(proj, project_args.common);
    proj->add_option("--in", project_args.in)->required();
    proj->add_option("--theta", project_args.theta, "angle in radians, or forms like 3pi/4");
    proj->add_option("--grid", project_args.grid, "CSV over direction_grid(p)");

    EsetsArgs esets_args;
    auto* esets = app.add_subcommand("esets", "the direction set E_s and its covering number");
    add_common(esets, esets_args.common);
    esets->add_option("--in", esets_args.in)->required();
    esets->add_option("--log2delta", esets_args.log2delta);
    esets->add_option("--s", esets_args.s)->required();
    esets->add_option("--log2r", esets_args.log2r);
    esets->add_option("--sweep", esets_args.sweep);
    esets->add_flag("--csv", esets_args.csv, "emit the sweep as CSV");

    IncidenceArgs inc_args;
    auto* inc = app.add_subcommand("incidence", "tube incidences against the three-term bound");
    add_common(inc, inc_args.common);
    inc->add_option("--in", inc_args.in)->required();
    inc->add_option("--log2delta", inc_args.log2delta);
    inc->add_option("--s", inc_args.s)->required();
    inc->add_option("--log2r", inc_args.log2r);
    inc->add_option("--sweep", inc_args.sweep);
    inc->add_option("--extract", inc_args.extract, "extract a (delta,1)-subset with this capacity constant");

    SharpnessArgs sharp_args;
    auto* sharp = app.add_subcommand("sharpness", "exact checks on the grid-of-segments example");
    add_common(sharp, sharp_args.common);
    sharp->add_option("--log2delta", sharp_args.log2delta)->required();
    sharp->add_option("--s", sharp_args.s)->required();
    sharp->add_option("--log2r", sharp_args.log2r)->required();
    sharp->add_flag("--exploratory", sharp_args.exploratory, "allow r > delta^s; nothing is asserted");
    sharp->add_flag("--csv", sharp_args.csv, "emit per-slope rows");
    sharp->add_flag("--no-covering", sharp_args.no_covering, "skip covering numbers of pi_e(K)");

    EntropyArgs ent_args;
    auto* ent = app.add_subcommand("entropy", "dyadic entropy tools");
    ent->require_subcommand(1);
    const auto add_entropy = [&](const std::string& name, const std::string& help) {
        auto* sub = ent->add_subcommand(name, help);
        add_common(sub, ent_args.common);
        sub->add_option("--in", ent_args.in)->required();
        return sub;
    };
    auto* ent_h = add_entropy("H", "normalized entropy at level m");
    ent_h->add_option("--m", ent_args.m);
    auto* ent_cef = add_entropy("cef", "conditional entropy formula");
    ent_cef->add_option("--fine", ent_args.fine);
    ent_cef->add_option("--coarse", ent_args.coarse);
    auto* ent_ms = add_entropy("multiscale", "multi-scale projection inequality");
    ent_ms->add_option("--m", ent_args.m)->required();
    ent_ms->add_option("--theta", ent_args.theta);
    auto* ent_mar = add_entropy("marstrand", "projected entropy averaged over 2^m directions");
    ent_mar->add_option("--m", ent_args.m);
    ent_mar->add_option("--mlist", ent_args.m_list)->delimiter(',');
    ent_mar->add_option("--svalues", ent_args.s_values)->delimiter(',');
    ent_mar->add_option("--A", ent_args.A);
    ent_mar->add_option("--tolerance", ent_args.tolerance);
    auto* ent_cover = add_entropy("cover", "occupied cells against the entropy lower bound");
    ent_cover->add_option("--s", ent_args.s)->required();
    auto* ent_blow = add_entropy("blowup", "rescaled restriction to a dyadic cube");
    ent_blow->add_option("--k", ent_args.k)->required();
    ent_blow->add_option("--qi", ent_args.qi)->required();
    ent_blow->add_option("--qj", ent_args.qj);

    AdregArgs ad_args;
    auto* ad = app.add_subcommand("adreg", "AD-regularity of a measure, or the four-corners direction averages");
    add_common(ad, ad_args.common);
    ad->add_option("--in", ad_args.in);
    ad->add_option("--level", ad_args.level)->check(CLI::Range(1, 15));
    ad->add_option("--plist", ad_args.plist)->delimiter(',');
    ad->add_option("--s", ad_args.s);
    ad->add_flag("--csv", ad_args.csv, "emit the averages table as CSV");

    Common report_common;
    std::vector<std::string> patterns;
    auto* rep = app.add_subcommand("report", "flatten JSON records to CSV");
    add_common(rep, report_common);
    rep->add_option("records", patterns, "record files or glob patterns")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidParameter;
    }

    try {
        if (gen->parsed()) {
            if (gen_args.shape == "grid3" && (gen_args.s.empty() || gen->count("--log2delta") == 0 ||
                                              gen->count("--log2r") == 0)) {
                throw InvalidParameter("grid3 needs --log2delta, --s and --log2r");
            }
            if (gen_args.shape == "fourcorners" && gen->count("--level") == 0) {
                throw InvalidParameter("fourcorners needs --level");
            }
            return cmd_gen(gen_args, out);
        }
        if (proj->parsed()) return cmd_project(project_args, out);
        if (esets->parsed()) return cmd_esets(esets_args, out, err);
        if (inc->parsed()) return cmd_incidence(inc_args, out, err);
        if (sharp->parsed()) return cmd_sharpness(sharp_args, out, err);
        if (ent->parsed()) {
            for (auto* sub : {ent_h, ent_cef, ent_ms, ent_mar, ent_cover, ent_blow}) {
                if (sub->parsed()) return cmd_entropy(sub->get_name(), ent_args, out, err);
            }
        }
        if (ad->parsed()) return cmd_adreg(ad_args, out, err);
        if (rep->parsed()) return cmd_report(patterns, report_common, out);
    } catch (const InvalidParameter& e) {
        err << "invalid parameter: " << e.what() << "\n";
        return kExitInvalidParameter;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const AssertionFailure& e) {
        err << "assertion failed: " << e.name() << " (" << e.what() << ")\n";
        return kExitAssertion;
    } catch (const std::runtime_error& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitInvalidParameter;
}

}  // namespace projlab
