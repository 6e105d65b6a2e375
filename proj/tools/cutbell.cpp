#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cutbell/families.hpp"
#include "cutbell/pipelines.hpp"
#include "cutbell/projections.hpp"

using namespace cutbell;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse an option value; library errors become usage errors.
template <class F>
auto option_value(const std::string& opt, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw UsageError(opt + ": " + e.what());
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- documents ----
// cut:  "graph <spec>" then "rhs | u-v:c ..." lines
// bell: "setting n,m,v" then "rhs | (j,k)..(j,k):c ..." lines
// cg:   one table, "cg <ma> <mb> rhs <r>" header
// corr: "corr n,m,v" then "rhs | j1,..,jn;k:c ..." lines

enum class DocKind { cut, bell, cg, corr };

struct Document {
    DocKind kind = DocKind::cut;
    GraphPtr graph;
    Setting setting;
    std::vector<LinearInequality> cuts;
    std::vector<BellInequality> bells;
    CGTable cg;
    std::vector<std::pair<RationalVector, Rational>> corrs;
};

std::string corr_label(const Setting& s, std::size_t idx) {
    const int k = static_cast<int>(idx % s.v) + 1;
    idx /= s.v;
    std::vector<int> js(s.n);
    for (int i = s.n - 1; i >= 0; --i) {
        js[i] = static_cast<int>(idx % s.m) + 1;
        idx /= s.m;
    }
    std::string out;
    for (int i = 0; i < s.n; ++i) out += (i ? "," : "") + std::to_string(js[i]);
    return out + ";" + std::to_string(k);
}

std::vector<std::string> corr_labels(const Setting& s) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < correlation_function_size(s); ++i) l.push_back(corr_label(s, i));
    return l;
}

std::pair<RationalVector, Rational> parse_labeled(const std::vector<std::string>& labels, const std::string& line) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "missing '|'");
    std::istringstream rs(line.substr(0, bar)), ts(line.substr(bar + 1));
    std::string tok;
    if (!(rs >> tok)) throw Error(ErrorCode::ParseError, "missing rhs");
    Rational rhs = parse_rational(tok);
    RationalVector a(labels.size());
    while (ts >> tok) {
        const auto colon = tok.rfind(':');
        auto it = colon == std::string::npos ? index.end() : index.find(tok.substr(0, colon));
        if (it == index.end()) throw Error(ErrorCode::ParseError, "bad term '" + tok + "'");
        a[it->second] += parse_rational(tok.substr(colon + 1));
    }
    return {a, rhs};
}

std::string format_labeled(const std::vector<std::string>& labels, const RationalVector& a, const Rational& rhs) {
    std::ostringstream os;
    os << to_string(rhs) << " |";
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) os << " " << labels[i] << ":" << to_string(a[i]);
    return os.str();
}

Document parse_document(const std::string& text, const std::string& graph_opt) {
    Document d;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string cg_text;
    std::vector<std::string> labels;
    if (!graph_opt.empty()) {
        d.graph = option_value("--graph", [&] { return graph_from_spec(graph_opt); });
        have_header = true;
    }
    while (std::getline(is, line)) {
        ++lineno;
        const auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        std::string tag, arg;
        ls >> tag;
        auto at = [&](const std::exception& e) { return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what()); };
        try {
            if (d.kind == DocKind::cg) {
                cg_text += line + "\n";
            } else if (tag == "graph" && ls >> arg) {
                auto g = graph_from_spec(arg);
                if (d.graph && *d.graph != *g) throw Error(ErrorCode::GraphMismatch, "file graph differs from --graph");
                d.graph = g;
                d.kind = DocKind::cut;
                have_header = true;
            } else if ((tag == "setting" || tag == "corr") && ls >> arg) {
                d.setting = parse_setting(arg);
                d.kind = tag == "setting" ? DocKind::bell : DocKind::corr;
                labels = d.kind == DocKind::bell ? bell_labels(d.setting) : corr_labels(d.setting);
                have_header = true;
            } else if (tag == "cg") {
                d.kind = DocKind::cg;
                cg_text = line + "\n";
                have_header = true;
            } else if (!have_header) {
                throw Error(ErrorCode::ParseError, "expected a 'graph', 'setting', 'corr' or 'cg' header");
            } else if (d.kind == DocKind::cut) {
                d.cuts.push_back(parse_inequality(d.graph, line));
            } else if (d.kind == DocKind::bell) {
                auto [a, r] = parse_labeled(labels, line);
                BellInequality b(d.setting);
                b.coeffs = a;
                b.rhs = r;
                d.bells.push_back(b);
            } else {
                d.corrs.push_back(parse_labeled(labels, line));
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ParseError) throw;
            throw at(e);
        }
    }
    if (d.kind == DocKind::cg) d.cg = parse_cg(cg_text);
    else if (!have_header) throw Error(ErrorCode::ParseError, "empty input");
    return d;
}

std::string write_cut(const std::vector<LinearInequality>& fs) {
    if (fs.empty()) return "";
    const std::string spec = graph_spec(*fs.front().graph);
    if (spec.empty()) throw Error(ErrorCode::GraphMismatch, "graph has no text spec");
    std::string out = "graph " + spec + "\n";
    for (const auto& f : fs) out += format_inequality(f) + "\n";
    return out;
}

std::string write_bell(const std::vector<BellInequality>& bs) {
    if (bs.empty()) return "";
    std::string out = "setting " + format_setting(bs.front().setting) + "\n";
    for (const auto& b : bs) out += format_bell(b) + "\n";
    return out;
}

// Everything a document holds, as cut inequalities (Bell and CG via K_{1,m,m}).
std::vector<LinearInequality> as_cuts(const Document& d) {
    switch (d.kind) {
    case DocKind::cut: return d.cuts;
    case DocKind::cg: return {cg_to_cut(d.cg)};
    case DocKind::bell: {
        std::vector<LinearInequality> out;
        for (const auto& b : d.bells) out.push_back(bell_ineq_to_cut(b));
        return out;
    }
    case DocKind::corr: break;
    }
    throw Error(ErrorCode::SettingMismatch, "correlation-function inequalities have no cut form");
}

std::vector<BellInequality> as_bells(const Document& d) {
    switch (d.kind) {
    case DocKind::bell: return d.bells;
    case DocKind::cg: return {from_cg_table(d.cg)};
    case DocKind::cut: {
        std::vector<BellInequality> out;
        for (const auto& f : d.cuts) out.push_back(cut_ineq_to_bell(f));
        return out;
    }
    case DocKind::corr: break;
    }
    throw Error(ErrorCode::SettingMismatch, "correlation-function inequalities have no Bell form");
}

std::string write_form(const std::string& form, const std::vector<LinearInequality>& fs) {
    if (form == "cut") return write_cut(fs);
    std::vector<BellInequality> bs;
    for (const auto& f : fs) bs.push_back(cut_ineq_to_bell(f));
    if (form == "bell") return write_bell(bs);
    std::string out;
    for (const auto& f : fs) out += format_cg(cut_to_cg(f));
    return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string report(const FacetReport& r) {
    return "valid: " + yes(r.valid) + ", facet: " + yes(r.is_facet) + ", roots: " + std::to_string(r.root_count) +
           ", rank: " + std::to_string(r.affine_root_rank);
}

std::vector<long> parse_longs(const std::string& opt, const std::string& text) {
    std::vector<long> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError(opt + ": bad integer '" + tok + "'");
        }
    }
    return out;
}

GroupSpec parse_group(const std::string& text, const Graph& g) {
    if (text.empty()) return default_group(g);
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    int param = 0;
    if (colon != std::string::npos) {
        auto v = parse_longs("--group", text.substr(colon + 1));
        if (v.size() != 1) throw UsageError("--group: bad parameter");
        param = static_cast<int>(v[0]);
    }
    if (kind == "full") return {GroupKind::full_Kn, param ? param : g.vertex_count()};
    if (kind == "restricted") return {GroupKind::restricted_G, param ? param : (g.vertex_count() - 1) / 2};
    if (kind == "tripartite") return {GroupKind::tripartite_H, param ? param : (g.vertex_count() - 1) / 2};
    throw UsageError("--group: expected full, restricted[:k] or tripartite[:m]");
}

std::string point_text(const Setting& s, const RationalVector& q, bool corr) {
    const auto labels = corr ? corr_labels(s) : bell_labels(s);
    std::ostringstream os;
    os << (corr ? "corrpoint " : "point ") << format_setting(s) << "\n";
    bool first = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        os << (first ? "" : " ") << labels[i] << ":" << to_string(q[i]);
        first = false;
    }
    os << "\n";
    return os.str();
}

// "point n,m,v" then "label:value" tokens
CorrelationTable parse_point(const std::string& text) {
    std::istringstream is(text);
    std::string tag, setting, tok;
    while (is >> tag && tag[0] == '#') std::getline(is, tok);
    if (tag != "point" || !(is >> setting)) throw Error(ErrorCode::ParseError, "point file needs a 'point n,m,v' header");
    CorrelationTable q{parse_setting(setting), {}};
    q.entries.assign(q.setting.table_size(), 0);
    std::map<std::string, std::size_t> index;
    const auto labels = bell_labels(q.setting);
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    while (is >> tok) {
        const auto colon = tok.rfind(':');
        auto it = colon == std::string::npos ? index.end() : index.find(tok.substr(0, colon));
        if (it == index.end()) throw Error(ErrorCode::ParseError, "bad entry '" + tok + "'");
        q.entries[it->second] = parse_rational(tok.substr(colon + 1));
    }
    return q;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cut and Bell polytope facet toolkit"};
    app.require_subcommand(1);
    std::ostringstream out;
    std::function<int()> action;

    // gen-hypermetric
    auto* gh = app.add_subcommand("gen-hypermetric", "Hypermetric inequality and its eliminated Bell form");
    std::string gh_a, gh_b, gh_form = "cg";
    long gh_c = 0;
    bool gh_literal = false;
    gh->add_option("--a", gh_a, "weights on A, comma separated")->required();
    gh->add_option("--b", gh_b, "weights on B, comma separated")->required();
    gh->add_option("--c", gh_c, "weight on X");
    gh->add_option("--form", gh_form, "cut, cg or bell")->check(CLI::IsMember({"cut", "cg", "bell"}));
    gh->add_flag("--literal", gh_literal, "use the printed closed form verbatim (CG output only)");
    gh->callback([&] {
        action = [&] {
            HypermetricWeights w;
            w.a = parse_longs("--a", gh_a);
            w.b = parse_longs("--b", gh_b);
            w.c = gh_c;
            w.k = static_cast<int>(w.a.size());
            if (w.b.size() != w.a.size()) throw UsageError("--a and --b need the same length");
            check_weights(w);
            if (gh_form == "cut") out << write_cut({hypermetric_cut(w)});
            else if (gh_form == "bell") out << write_bell({hypermetric_bell_direct(w)});
            else out << format_cg(gh_literal ? hypermetric_cg_literal(w) : hypermetric_cg_direct(w));
            out << "# facet condition: " << yes(hypermetric_facet_condition(w)) << "\n";
            return 0;
        };
    });

    // imm22
    auto* im = app.add_subcommand("imm22", "I_mm22 inequality");
    int im_m = 2;
    std::string im_form = "cg";
    im->add_option("--m", im_m, "number of observables")->required()->check(CLI::Range(2, 64));
    im->add_option("--form", im_form, "cut, cg or bell")->check(CLI::IsMember({"cut", "cg", "bell"}));
    im->callback([&] {
        action = [&] {
            out << write_form(im_form, {cg_to_cut(imm22(im_m))});
            return 0;
        };
    });

    // eliminate
    auto* el = app.add_subcommand("eliminate", "Triangular elimination K_n -> K_{1,m,m}");
    std::string el_in, el_graph, el_mode = "strict", el_form = "cut";
    bool el_switched = false, el_trace = false;
    el->add_option("input,--ineq", el_in, "cut inequality file ('-' for stdin)");
    el->add_option("--graph", el_graph, "graph spec kn:N when the file has no header");
    el->add_option("--mode", el_mode, "strict or compact")->check(CLI::IsMember({"strict", "compact"}));
    el->add_option("--form", el_form, "output form: cut, cg or bell")->check(CLI::IsMember({"cut", "cg", "bell"}));
    el->add_flag("--switched", el_switched, "switched form for negative coefficients (strict mode)");
    el->add_flag("--trace", el_trace, "print the step trace as comments");
    el->callback([&] {
        action = [&] {
            auto d = parse_document(read_input(el_in), el_graph);
            std::vector<LinearInequality> res;
            for (const auto& f : as_cuts(d)) {
                auto t = eliminate_to_tripartite(f, el_mode == "compact" ? EliminationMode::compact : EliminationMode::strict,
                                                 el_switched);
                if (el_trace) {
                    std::istringstream ts(format_trace(t));
                    std::string l;
                    while (std::getline(ts, l)) out << "# " << l << "\n";
                }
                res.push_back(t.result);
            }
            out << write_form(el_form, res);
            return 0;
        };
    });

    // verify
    auto* ve = app.add_subcommand("verify", "Validity and facet test");
    std::string ve_in, ve_graph, ve_fixture;
    ve->add_option("input,--ineq", ve_in, "inequality file (cut, bell or cg)");
    ve->add_option("--graph", ve_graph, "graph spec for headerless cut files");
    ve->add_option("--fixture", ve_fixture, "verify a named fixture");
    ve->callback([&] {
        action = [&] {
            std::vector<FacetReport> reports;
            if (!ve_fixture.empty()) {
                const auto fx = option_value("--fixture", [&] { return fixture(ve_fixture); });
                reports.push_back(facet_status(fx.cut()));
            } else {
                auto d = parse_document(read_input(ve_in), ve_graph);
                if (d.kind == DocKind::cut)
                    for (const auto& f : d.cuts) reports.push_back(facet_status(f));
                else
                    for (const auto& b : as_bells(d)) reports.push_back(bell_facet_status(b));
            }
            bool all_valid = true;
            for (const auto& r : reports) {
                out << report(r) << "\n";
                all_valid &= r.valid;
            }
            return all_valid ? 0 : 1;
        };
    });

    // classify
    auto* cl = app.add_subcommand("classify", "Classify inequalities up to symmetry and switching");
    std::string cl_in, cl_graph, cl_group;
    unsigned cl_jobs = 1;
    cl->add_option("input,--ineq", cl_in, "cut inequality file");
    cl->add_option("--graph", cl_graph, "graph spec for headerless files");
    cl->add_option("--group", cl_group, "full[:n], restricted[:k] or tripartite[:m]");
    cl->add_option("--jobs", cl_jobs, "worker threads")->check(CLI::Range(1u, 256u));
    cl->callback([&] {
        action = [&] {
            auto fs = as_cuts(parse_document(read_input(cl_in), cl_graph));
            if (fs.empty()) throw Error(ErrorCode::ParseError, "no inequalities");
            const auto spec = parse_group(cl_group, *fs.front().graph);
            out << format_classification(classify(fs, spec, cl_jobs));
            return 0;
        };
    });

    // count-classes
    auto* cc = app.add_subcommand("count-classes", "Count classes of eliminated CUT(K_n) facets");
    std::string cc_source, cc_pipeline = "eliminate";
    unsigned cc_jobs = 1;
    cc->add_option("--source", cc_source, "cutN (hull-computed) or an import-facets file")->required();
    cc->add_option("--pipeline", cc_pipeline, "eliminate or none")->check(CLI::IsMember({"eliminate", "none"}));
    cc->add_option("--jobs", cc_jobs, "worker threads")->check(CLI::Range(1u, 256u));
    cc->callback([&] {
        action = [&] {
            std::vector<LinearInequality> facets;
            if (cc_source.rfind("cut", 0) == 0 && cc_source.size() > 3 && std::isdigit(static_cast<unsigned char>(cc_source[3]))) {
                const auto n = parse_longs("--source", cc_source.substr(3));
                if (n.size() != 1 || n[0] < 3 || n[0] > 8) throw UsageError("--source: cutN needs 3 <= N <= 8");
                facets = cut_polytope_facets(make_graph(complete_graph(static_cast<int>(n[0]))));
            } else {
                facets = import_facets(read_input(cc_source));
            }
            if (facets.empty()) throw Error(ErrorCode::ParseError, "no facets in source");
            const auto r = cc_pipeline == "eliminate" ? eliminated_classes(facets, cc_jobs)
                                                      : classify(facets, default_group(*facets.front().graph), cc_jobs);
            out << "classes " << r.class_count << "\n";
            return 0;
        };
    });

    // convert
    auto* cv = app.add_subcommand("convert", "Convert between cut, CG and Bell forms");
    std::string cv_in, cv_graph, cv_from, cv_to;
    cv->add_option("input,--ineq", cv_in, "input file");
    cv->add_option("--graph", cv_graph, "graph spec for headerless cut files");
    cv->add_option("--from", cv_from, "cut, cg or bell")->required()->check(CLI::IsMember({"cut", "cg", "bell"}));
    cv->add_option("--to", cv_to, "cut, cg or bell")->required()->check(CLI::IsMember({"cut", "cg", "bell"}));
    cv->callback([&] {
        action = [&] {
            auto d = parse_document(read_input(cv_in), cv_graph);
            const DocKind want = cv_from == "cut" ? DocKind::cut : cv_from == "cg" ? DocKind::cg : DocKind::bell;
            if (d.kind != want) throw Error(ErrorCode::ParseError, "input is not in " + cv_from + " form");
            out << write_form(cv_to, as_cuts(d));
            return 0;
        };
    });

    // hull
    auto* hu = app.add_subcommand("hull", "Facet enumeration of a cut, Bell or correlation polytope");
    std::string hu_graph, hu_setting, hu_corr;
    std::size_t hu_rays = HullOptions{}.max_rays;
    hu->add_option("--graph", hu_graph, "cut polytope of a graph spec");
    hu->add_option("--setting", hu_setting, "Bell polytope n,m,v");
    hu->add_option("--corrfunc", hu_corr, "correlation-function polytope n,m,v");
    hu->add_option("--max-rays", hu_rays, "intermediate ray limit");
    hu->callback([&] {
        action = [&] {
            if (hu_graph.empty() + hu_setting.empty() + hu_corr.empty() != 2)
                throw UsageError("hull needs exactly one of --graph, --setting, --corrfunc");
            HullOptions opt;
            opt.max_rays = hu_rays;
            if (!hu_graph.empty()) {
                auto g = option_value("--graph", [&] { return graph_from_spec(hu_graph); });
                std::vector<std::vector<std::int64_t>> pts;
                for (const auto& c : enumerate_cut_vectors(g)) pts.push_back(c.to_int());
                out << format_hrep(facet_enumeration(pts, opt), edge_labels(*g));
            } else if (!hu_setting.empty()) {
                auto s = option_value("--setting", [&] { return parse_setting(hu_setting); });
                out << format_hrep(facet_enumeration(bell_vertex_rows(s), opt), bell_labels(s));
            } else {
                auto s = option_value("--corrfunc", [&] { return parse_setting(hu_corr); });
                auto p = make_projection(ProjectionKind::corrfunc, s);
                out << format_hrep(facet_enumeration(projected_vertices(p), opt), corr_labels(s));
            }
            return 0;
        };
    });

    // project
    auto* pr = app.add_subcommand("project", "Apply a projection to a point");
    std::string pr_spec, pr_in;
    pr->add_option("--proj", pr_spec, "projection spec, e.g. 'proj party 3,2,2->2,2,2 j=1'")->required();
    pr->add_option("input", pr_in, "point file ('point n,m,v' then label:value entries)");
    pr->callback([&] {
        action = [&] {
            auto p = option_value("--proj", [&] { return parse_projection(pr_spec); });
            auto q = parse_point(read_input(pr_in));
            if (q.setting != p.source) throw Error(ErrorCode::SettingMismatch, "point setting differs from the projection source");
            out << "# " << format_projection(p) << "\n";
            out << point_text(p.target, project_vector(p, q.entries), p.kind == ProjectionKind::corrfunc);
            return 0;
        };
    });

    // lift
    auto* li = app.add_subcommand("lift", "Lift an inequality through a projection");
    std::string li_spec, li_in;
    li->add_option("--proj", li_spec, "projection spec")->required();
    li->add_option("input,--ineq", li_in, "target inequality file (bell, cg or corr)");
    li->callback([&] {
        action = [&] {
            auto p = option_value("--proj", [&] { return parse_projection(li_spec); });
            auto d = parse_document(read_input(li_in), "");
            std::vector<BellInequality> lifted;
            std::vector<FacetReport> reports;
            if (d.kind == DocKind::corr) {
                if (d.setting != p.target) throw Error(ErrorCode::SettingMismatch, "inequality setting differs from the target");
                for (const auto& [a, r] : d.corrs) lifted.push_back(lift_inequality(p, a, r));
            } else {
                for (const auto& b : as_bells(d)) lifted.push_back(lift_inequality(p, b));
            }
            out << "# " << format_projection(p) << "\n";
            for (const auto& b : lifted) out << "# " << report(bell_facet_status(b)) << "\n";
            out << write_bell(lifted);
            return 0;
        };
    });

    // fixtures
    auto* fx = app.add_subcommand("fixtures", "List or print the bundled fixtures");
    std::string fx_name, fx_form;
    fx->add_option("name", fx_name, "fixture to print");
    fx->add_option("--form", fx_form, "cut, cg or bell (default: stored form)")->check(CLI::IsMember({"cut", "cg", "bell"}));
    fx->callback([&] {
        action = [&] {
            if (fx_name.empty()) {
                for (const auto& n : fixture_names()) out << n << "  " << fixture(n).provenance << "\n";
                return 0;
            }
            const auto f = option_value("name", [&] { return fixture(fx_name); });
            out << "# " << f.provenance << "\n";
            const std::string form = fx_form.empty() ? (f.is_cg() ? "cg" : "cut") : fx_form;
            if (form == "cg" && f.is_cg()) out << format_cg(f.cg());
            else out << write_form(form, {f.cut()});
            return 0;
        };
    });

    // import-facets
    auto* ifa = app.add_subcommand("import-facets", "Read an external CUT(K_n) facet list");
    std::string if_in, if_pipeline = "none";
    ifa->add_option("input", if_in, "facet list ('n', 'order', 'rhs' headers, then rows)");
    ifa->add_option("--pipeline", if_pipeline, "none or eliminate")->check(CLI::IsMember({"eliminate", "none"}));
    ifa->callback([&] {
        action = [&] {
            auto fs = import_facets(read_input(if_in));
            if (if_pipeline == "eliminate") {
                std::vector<LinearInequality> el;
                for (const auto& f : fs) el.push_back(eliminate_to_tripartite(f).result);
                fs = std::move(el);
            }
            out << write_cut(fs);
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        const int code = action();
        std::cout << out.str();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
