#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cutbell/bell.hpp"

namespace cutbell {

enum class ProjectionKind { party, observable, value, corrfunc };

// party: drop the last party, summing its outcomes for observable j.
// observable: keep the first m of m+1 observables. value: merge values v and v+1.
// corrfunc: full correlation function s_{j1..jn,k}, k = k1+..+kn mod v.
struct ProjectionSpec {
    ProjectionKind kind = ProjectionKind::party;
    Setting source;
    Setting target;
    int j = 1;
};

struct CorrelationFunction {
    Setting setting;
    RationalVector entries; // index (j1..jn, k): ((j1-1)*m + ...)*v + (k-1)

    bool operator==(const CorrelationFunction& o) const { return setting == o.setting && entries == o.entries; }
};

inline std::size_t correlation_function_size(const Setting& s) {
    std::size_t r = s.v;
    for (int i = 0; i < s.n; ++i) r *= s.m;
    return r;
}

inline const char* kind_name(ProjectionKind k) {
    switch (k) {
    case ProjectionKind::party: return "party";
    case ProjectionKind::observable: return "observable";
    case ProjectionKind::value: return "value";
    case ProjectionKind::corrfunc: return "corrfunc";
    }
    return "";
}

inline void validate(const ProjectionSpec& p) {
    const Setting& s = p.source;
    const Setting& t = p.target;
    bool ok = false;
    switch (p.kind) {
    case ProjectionKind::party: ok = t.n + 1 == s.n && t.m == s.m && t.v == s.v && t.n >= 1 && p.j >= 1 && p.j <= s.m; break;
    case ProjectionKind::observable: ok = t.n == s.n && t.m + 1 == s.m && t.v == s.v && t.m >= 1; break;
    case ProjectionKind::value: ok = t.n == s.n && t.m == s.m && t.v + 1 == s.v && t.v >= 1; break;
    case ProjectionKind::corrfunc: ok = t == s; break;
    }
    if (!ok)
        throw Error(ErrorCode::SettingMismatch, std::string("settings do not fit a ") + kind_name(p.kind) + " projection");
}

inline ProjectionSpec make_projection(ProjectionKind kind, const Setting& source, int j = 1) {
    ProjectionSpec p{kind, source, source, j};
    switch (kind) {
    case ProjectionKind::party: p.target.n -= 1; break;
    case ProjectionKind::observable: p.target.m -= 1; break;
    case ProjectionKind::value: p.target.v -= 1; break;
    case ProjectionKind::corrfunc: break;
    }
    validate(p);
    return p;
}

inline std::size_t target_size(const ProjectionSpec& p) {
    return p.kind == ProjectionKind::corrfunc ? correlation_function_size(p.target) : p.target.table_size();
}

// pi[i] = target coordinate receiving source coordinate i, or -1.
inline std::vector<long> projection_index(const ProjectionSpec& p, int j) {
    validate(p);
    const Setting& s = p.source;
    const Setting& t = p.target;
    std::vector<long> pi(s.table_size(), -1);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        Tuple tu = index_tuple(s, i);
        switch (p.kind) {
        case ProjectionKind::party:
            if (tu.back().first != j) continue;
            tu.pop_back();
            pi[i] = static_cast<long>(tuple_index(t, tu));
            break;
        case ProjectionKind::observable: {
            bool keep = true;
            for (auto [jj, k] : tu) keep &= jj <= t.m;
            if (keep) pi[i] = static_cast<long>(tuple_index(t, tu));
            break;
        }
        case ProjectionKind::value:
            for (auto& [jj, k] : tu) k = std::min(k, t.v);
            pi[i] = static_cast<long>(tuple_index(t, tu));
            break;
        case ProjectionKind::corrfunc: {
            long idx = 0;
            int sum = 0;
            for (auto [jj, k] : tu) {
                idx = idx * s.m + (jj - 1);
                sum += k;
            }
            const int k = (sum % s.v == 0) ? s.v : sum % s.v;
            pi[i] = idx * s.v + (k - 1);
            break;
        }
        }
    }
    return pi;
}

inline std::vector<long> projection_index(const ProjectionSpec& p) { return projection_index(p, p.j); }

// Index maps cached for repeated projection of points.
class Projector {
public:
    explicit Projector(const ProjectionSpec& p) : spec_(p), pi_(projection_index(p)) {
        if (p.kind == ProjectionKind::party)
            for (int j = 1; j <= p.source.m; ++j)
                if (j != p.j) alt_.emplace_back(j, projection_index(p, j));
    }

    const ProjectionSpec& spec() const { return spec_; }

    RationalVector operator()(const RationalVector& q) const {
        if (q.size() != spec_.source.table_size()) throw Error(ErrorCode::SettingMismatch, "point does not match the source setting");
        RationalVector out = apply(pi_, q);
        for (const auto& [j, pj] : alt_)
            if (apply(pj, q) != out)
                throw Error(ErrorCode::NotNoSignaling, "marginal of the dropped party depends on observable " + std::to_string(j));
        return out;
    }

private:
    RationalVector apply(const std::vector<long>& pi, const RationalVector& q) const {
        RationalVector out(target_size(spec_));
        for (std::size_t i = 0; i < q.size(); ++i)
            if (pi[i] >= 0 && q[i] != 0) out[pi[i]] += q[i];
        return out;
    }

    ProjectionSpec spec_;
    std::vector<long> pi_;
    std::vector<std::pair<int, std::vector<long>>> alt_;
};

inline RationalVector project_vector(const ProjectionSpec& p, const RationalVector& q) { return Projector(p)(q); }

inline CorrelationTable project_point(const ProjectionSpec& p, const CorrelationTable& q) {
    if (q.setting != p.source) throw Error(ErrorCode::SettingMismatch, "point does not match the source setting");
    if (p.kind == ProjectionKind::corrfunc) throw Error(ErrorCode::SettingMismatch, "corrfunc projection yields a correlation function");
    return CorrelationTable{p.target, project_vector(p, q.entries)};
}

inline CorrelationFunction correlation_function(const ProjectionSpec& p, const CorrelationTable& q) {
    if (p.kind != ProjectionKind::corrfunc) throw Error(ErrorCode::SettingMismatch, "not a corrfunc projection");
    if (q.setting != p.source) throw Error(ErrorCode::SettingMismatch, "point does not match the source setting");
    return CorrelationFunction{p.target, project_vector(p, q.entries)};
}

// Coefficients of a.phi(q) in source coordinates.
inline RationalVector lift_coefficients(const ProjectionSpec& p, const RationalVector& a) {
    if (a.size() != target_size(p)) throw Error(ErrorCode::SettingMismatch, "inequality does not match the target coordinates");
    const auto pi = projection_index(p);
    RationalVector out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (pi[i] >= 0) out[i] = a[pi[i]];
    return out;
}

// Validity is checked on the source polytope, whose image is the target polytope.
inline BellInequality lift_inequality(const ProjectionSpec& p, const RationalVector& a, const Rational& a0) {
    BellInequality b(p.source);
    b.coeffs = lift_coefficients(p, a);
    b.rhs = a0;
    if (!bell_is_valid(b)) throw Error(ErrorCode::NotValid, "inequality is not valid for the target polytope");
    return b;
}

inline BellInequality lift_inequality(const ProjectionSpec& p, const BellInequality& ineq) {
    if (p.kind == ProjectionKind::corrfunc || ineq.setting != p.target)
        throw Error(ErrorCode::SettingMismatch, "inequality does not match the target setting");
    return lift_inequality(p, ineq.coeffs, ineq.rhs);
}

inline FacetReport lift_facet_check(const ProjectionSpec& p, const BellInequality& ineq) {
    return bell_facet_status(lift_inequality(p, ineq));
}

inline std::vector<RationalVector> projected_vertices(const ProjectionSpec& p) {
    std::vector<RationalVector> out;
    const auto pi = projection_index(p);
    const std::size_t d = target_size(p);
    for_each_bell_vertex(p.source, [&](const std::vector<int>&, const std::vector<std::size_t>& ones) {
        RationalVector v(d);
        for (auto i : ones)
            if (pi[i] >= 0) v[pi[i]] += 1;
        out.push_back(std::move(v));
        return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// "proj <kind> <n,m,v>-><n,m,v> [j=...|psi=v,v+1]"
inline std::string format_projection(const ProjectionSpec& p) {
    std::string s = std::string("proj ") + kind_name(p.kind) + " " + format_setting(p.source) + "->" + format_setting(p.target);
    if (p.kind == ProjectionKind::party) s += " j=" + std::to_string(p.j);
    if (p.kind == ProjectionKind::value) s += " psi=" + std::to_string(p.target.v) + "," + std::to_string(p.source.v);
    return s;
}

inline Setting parse_setting(const std::string& text) {
    Setting s;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> s.n >> c1 >> s.m >> c2 >> s.v) || c1 != ',' || c2 != ',' || s.n < 1 || s.m < 1 || s.v < 1)
        throw Error(ErrorCode::ParseError, "bad setting '" + text + "'");
    std::string rest;
    if (is >> rest) throw Error(ErrorCode::ParseError, "bad setting '" + text + "'");
    return s;
}

inline ProjectionKind parse_kind(const std::string& k) {
    if (k == "party") return ProjectionKind::party;
    if (k == "observable") return ProjectionKind::observable;
    if (k == "value") return ProjectionKind::value;
    if (k == "corrfunc") return ProjectionKind::corrfunc;
    throw Error(ErrorCode::ParseError, "unknown projection kind '" + k + "'");
}

inline ProjectionSpec parse_projection(const std::string& text) {
    std::istringstream is(text);
    std::string tag, kind, settings, extra;
    if (!(is >> tag >> kind >> settings) || tag != "proj") throw Error(ErrorCode::ParseError, "bad projection '" + text + "'");
    const auto arrow = settings.find("->");
    if (arrow == std::string::npos) throw Error(ErrorCode::ParseError, "projection needs source->target");
    ProjectionSpec p{parse_kind(kind), parse_setting(settings.substr(0, arrow)), parse_setting(settings.substr(arrow + 2)), 1};
    while (is >> extra) {
        if (extra.rfind("j=", 0) == 0 && p.kind == ProjectionKind::party) {
            p.j = std::stoi(extra.substr(2));
        } else if (extra.rfind("psi=", 0) == 0 && p.kind == ProjectionKind::value) {
            if (extra != "psi=" + std::to_string(p.target.v) + "," + std::to_string(p.source.v))
                throw Error(ErrorCode::ParseError, "psi must merge the two largest values");
        } else {
            throw Error(ErrorCode::ParseError, "unexpected '" + extra + "' in projection");
        }
    }
    validate(p);
    return p;
}

} // namespace cutbell
