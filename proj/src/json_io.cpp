#include "mconv/json_io.hpp"

#include <cmath>
#include <limits>

namespace mconv {

namespace {

const ojson& field(const ojson& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw ValidationError(std::string("missing field '") + name + "'");
    return j.at(name);
}

// True for integer values >= 0 regardless of whether the document stores them
// signed (assigned from int) or unsigned (parsed from text).
bool nonneg_int(const ojson& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t dim_field(const ojson& j) {
    const auto& d = field(j, "dim");
    if (!nonneg_int(d) || d.get<std::uint64_t>() == 0)
        throw ValidationError("'dim' must be a positive integer");
    return d.get<std::size_t>();
}

MultiIndex multi_index_from_json(const ojson& j, std::size_t dim, const char* name) {
    if (!j.is_array() || j.size() != dim)
        throw ValidationError(std::string("'") + name + "' must be an array of length dim");
    std::vector<std::uint32_t> e;
    e.reserve(dim);
    for (const auto& v : j) {
        if (!nonneg_int(v))
            throw ValidationError(std::string("'") + name + "' entries must be non-negative integers");
        e.push_back(v.get<std::uint32_t>());
    }
    return MultiIndex(std::move(e));
}

ojson multi_index_to_json(const MultiIndex& m) {
    ojson a = ojson::array();
    for (std::size_t j = 0; j < m.dim(); ++j) a.push_back(m[j]);
    return a;
}

double endpoint_from_json(const ojson& j, const char* name) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw ValidationError(std::string("'") + name + "': bad endpoint '" + s + "'");
    }
    if (j.is_number()) return j.get<double>();
    throw ValidationError(std::string("'") + name + "' must be a number, \"inf\" or \"-inf\"");
}

ojson endpoint_to_json(double v) {
    if (std::isinf(v)) return ojson(v > 0 ? "inf" : "-inf");
    return ojson(v);
}

bool bool_field(const ojson& j, const char* name) {
    const auto& b = field(j, name);
    if (!b.is_boolean()) throw ValidationError(std::string("'") + name + "' must be a boolean");
    return b.get<bool>();
}

double number_field(const ojson& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number()) throw ValidationError(std::string("'") + name + "' must be a number");
    return v.get<double>();
}

} // namespace

ojson parse_json(const std::string& text) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

ojson to_json(const Rational& r) { return ojson(r.to_string()); }

Rational rational_from_json(const ojson& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw ValidationError("rational values must be strings like \"3/4\" (or integers)");
}

ojson to_json(const PointDistribution& T) {
    ojson j;
    j["dim"] = T.dim();
    ojson terms = ojson::array();
    for (const auto& [k, c] : T.terms()) {
        ojson t;
        ojson pt = ojson::array();
        for (const auto& p : k.point) pt.push_back(p.to_string());
        t["point"] = std::move(pt);
        t["mu"] = multi_index_to_json(k.mu);
        t["coef"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

PointDistribution distribution_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    const auto& terms = field(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    std::vector<PointDistribution::Term> ts;
    ts.reserve(terms.size());
    for (const auto& t : terms) {
        const auto& pt = field(t, "point");
        if (!pt.is_array() || pt.size() != dim)
            throw ValidationError("'point' must be an array of length dim");
        std::vector<Rational> point;
        point.reserve(dim);
        for (const auto& p : pt) point.push_back(rational_from_json(p));
        ts.push_back({std::move(point), multi_index_from_json(field(t, "mu"), dim, "mu"),
                      rational_from_json(field(t, "coef"))});
    }
    return PointDistribution::make(dim, ts);
}

ojson to_json(const EulerOperator& P) {
    ojson j;
    j["dim"] = P.dim();
    ojson terms = ojson::array();
    for (const auto& [a, c] : P.theta_coeffs()) {
        ojson t;
        t["alpha"] = multi_index_to_json(a);
        t["coef"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["theta"] = std::move(terms);
    return j;
}

EulerOperator operator_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    const auto& terms = field(j, "theta");
    if (!terms.is_array()) throw ValidationError("'theta' must be an array");
    std::vector<std::pair<MultiIndex, Rational>> ts;
    ts.reserve(terms.size());
    for (const auto& t : terms)
        ts.emplace_back(multi_index_from_json(field(t, "alpha"), dim, "alpha"),
                        rational_from_json(field(t, "coef")));
    return EulerOperator::make(dim, ts);
}

ojson xd_form_to_json(std::size_t dim, const std::map<MultiIndex, Rational>& xd) {
    ojson j;
    j["dim"] = dim;
    ojson terms = ojson::array();
    for (const auto& [a, c] : xd) {
        ojson t;
        t["alpha"] = multi_index_to_json(a);
        t["coef"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["xd"] = std::move(terms);
    return j;
}

ojson to_json(const SeriesTable& S) {
    ojson j;
    j["dim"] = S.dim();
    ojson md = ojson::array();
    for (auto m : S.max_degree()) md.push_back(m);
    j["max_degree"] = std::move(md);
    ojson entries = ojson::array();
    S.for_each([&](const MultiIndex& a, const Rational& v) {
        ojson e;
        e["alpha"] = multi_index_to_json(a);
        e["value"] = v.to_string();
        entries.push_back(std::move(e));
    });
    j["coeffs"] = std::move(entries);
    return j;
}

SeriesTable series_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    const auto& md = field(j, "max_degree");
    if (!md.is_array() || md.size() != dim)
        throw ValidationError("'max_degree' must be an array of length dim");
    std::vector<std::uint32_t> m;
    for (const auto& v : md) {
        if (!nonneg_int(v))
            throw ValidationError("'max_degree' entries must be non-negative integers");
        m.push_back(v.get<std::uint32_t>());
    }
    SeriesTable S(dim, m);
    const auto& entries = field(j, "coeffs");
    if (!entries.is_array()) throw ValidationError("'coeffs' must be an array");
    for (const auto& e : entries)
        S.set(multi_index_from_json(field(e, "alpha"), dim, "alpha"),
              rational_from_json(field(e, "value")));
    return S;
}

ojson to_json(const RationalTransform& F) {
    ojson j;
    j["dim"] = F.dim();
    ojson terms = ojson::array();
    for (const auto& t : F.terms()) {
        ojson jt;
        jt["coef"] = t.coef.to_string();
        ojson fs = ojson::array();
        for (const auto& f : t.factors) {
            ojson jf;
            jf["pole"] = f.pole.to_string();
            jf["num_power"] = f.num_power;
            jf["den_power"] = f.den_power;
            fs.push_back(std::move(jf));
        }
        jt["factors"] = std::move(fs);
        terms.push_back(std::move(jt));
    }
    j["terms"] = std::move(terms);
    return j;
}

RationalTransform transform_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    RationalTransform F(dim);
    const auto& terms = field(j, "terms");
    if (!terms.is_array()) throw ValidationError("'terms' must be an array");
    for (const auto& t : terms) {
        TransformTerm tt;
        tt.coef = rational_from_json(field(t, "coef"));
        const auto& fs = field(t, "factors");
        if (!fs.is_array() || fs.size() != dim)
            throw ValidationError("'factors' must be an array of length dim");
        for (const auto& f : fs) {
            TransformFactor tf;
            tf.pole = rational_from_json(field(f, "pole"));
            const auto& np = field(f, "num_power");
            const auto& dp = field(f, "den_power");
            if (!nonneg_int(np) || !nonneg_int(dp))
                throw ValidationError("factor powers must be non-negative integers");
            tf.num_power = np.get<unsigned>();
            tf.den_power = dp.get<unsigned>();
            tt.factors.push_back(std::move(tf));
        }
        F.add_term(std::move(tt));
    }
    return F;
}

ojson to_json(const Interval& i) {
    ojson j;
    j["lo"] = endpoint_to_json(i.lo);
    j["hi"] = endpoint_to_json(i.hi);
    j["lo_closed"] = i.lo_closed;
    j["hi_closed"] = i.hi_closed;
    return j;
}

Interval interval_from_json(const ojson& j) {
    return Interval(endpoint_from_json(field(j, "lo"), "lo"),
                    endpoint_from_json(field(j, "hi"), "hi"),
                    bool_field(j, "lo_closed"), bool_field(j, "hi_closed"));
}

ojson to_json(const Box& b) {
    ojson j;
    j["dim"] = b.dim();
    j["empty"] = b.empty();
    ojson ivs = ojson::array();
    if (!b.empty())
        for (const auto& i : b.intervals()) ivs.push_back(to_json(i));
    j["intervals"] = std::move(ivs);
    return j;
}

Box box_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    if (j.contains("empty") && bool_field(j, "empty")) return Box::empty_box(dim);
    const auto& ivs = field(j, "intervals");
    if (!ivs.is_array() || ivs.size() != dim)
        throw ValidationError("'intervals' must be an array of length dim");
    std::vector<Interval> out;
    out.reserve(dim);
    for (const auto& i : ivs) out.push_back(interval_from_json(i));
    return Box(std::move(out));
}

ojson to_json(const PointSet& s) {
    ojson j;
    j["dim"] = s.dim;
    ojson pts = ojson::array();
    for (const auto& p : s.points) {
        ojson q = ojson::array();
        for (double v : p) q.push_back(v);
        pts.push_back(std::move(q));
    }
    j["points"] = std::move(pts);
    return j;
}

PointSet pointset_from_json(const ojson& j) {
    const std::size_t dim = dim_field(j);
    const auto& pts = field(j, "points");
    if (!pts.is_array()) throw ValidationError("'points' must be an array");
    std::vector<std::vector<double>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != dim)
            throw ValidationError("each point must be an array of length dim");
        std::vector<double> q;
        q.reserve(dim);
        for (const auto& v : p) {
            if (!v.is_number()) throw ValidationError("point coordinates must be numbers");
            q.push_back(v.get<double>());
        }
        out.push_back(std::move(q));
    }
    return PointSet::make(dim, std::move(out));
}

ojson to_json(const GridFunction& g) {
    ojson j;
    j["r"] = g.r;
    j["R"] = g.R;
    j["n"] = g.n;
    ojson vs = ojson::array();
    for (double v : g.values) vs.push_back(v);
    j["values"] = std::move(vs);
    return j;
}

GridFunction grid_from_json(const ojson& j) {
    const double r = number_field(j, "r");
    const double R = number_field(j, "R");
    const auto& nn = field(j, "n");
    if (!nonneg_int(nn) || nn.get<std::int64_t>() == 0)
        throw ValidationError("'n' must be a positive integer");
    GridFunction g(r, R, nn.get<int>());
    const auto& vs = field(j, "values");
    if (!vs.is_array() || static_cast<int>(vs.size()) != g.n)
        throw ValidationError("'values' must be an array of length n");
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (!vs[k].is_number()) throw ValidationError("'values' entries must be numbers");
        g.values[k] = vs[k].get<double>();
    }
    return g;
}

ojson to_json(const SDReport& r) {
    ojson j;
    j["verdict"] = to_string(r.verdict);
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["b_tuned"] = r.b_tuned;
    j["min_margin"] = r.min_margin;
    j["note"] = r.note;
    ojson samples = ojson::array();
    for (const auto& s : r.samples) {
        ojson e;
        e["x"] = s.x;
        e["y"] = s.y;
        e["char_abs"] = s.char_abs;
        e["margin"] = s.margin;
        e["radius"] = s.radius;
        e["ok"] = s.ok;
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    return j;
}

} // namespace mconv
