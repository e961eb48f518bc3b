#include "cospectra/serialize.hpp"

#include "cospectra/error.hpp"

#include <sstream>

namespace cospectra {

Json real_to_json(const Real& x, int digits) { return Json{{"value", x.to_decimal(digits)}, {"digits", digits}}; }

namespace {

Json rationals(const std::vector<Rational>& v)
{
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

Json reals(const std::vector<Real>& v, int digits)
{
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.to_decimal(digits));
    return arr;
}

Json pair_json(VertexPair p) { return Json::array({p.i, p.j}); }

} // namespace

Json to_json(const WalkTable& walks)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < walks.order(); ++i) rows.push_back(rationals(walks.row(i)));
    return Json{{"n", walks.order()}, {"length", walks.length()}, {"walks", rows}};
}

WalkTable walk_table_from_json(const Json& j)
{
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto len = j.at("length").get<std::size_t>();
        const auto& rows = j.at("walks");
        if (rows.size() != n) throw ParseError("walk table: expected " + std::to_string(n) + " rows");
        WalkTable t(n, len);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != len) throw ParseError("walk table: row " + std::to_string(i) + " has wrong length");
            for (std::size_t r = 0; r < len; ++r) t.at(i, r + 1) = parse_rational(rows[i][r].get<std::string>());
        }
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("walk table: ") + e.what());
    }
}

Json to_json(const CharPoly& cp)
{
    return Json{{"degree", cp.degree()}, {"coefficients", rationals(cp.coefficients())}};
}

CharPoly char_poly_from_json(const Json& j)
{
    try {
        std::vector<Rational> c;
        for (const auto& s : j.at("coefficients")) c.push_back(parse_rational(s.get<std::string>()));
        if (c.size() != j.at("degree").get<std::size_t>() + 1) throw ParseError("char poly: degree mismatch");
        return CharPoly(std::move(c));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("char poly: ") + e.what());
    }
}

Json to_json(const SpectralData& sd)
{
    const int digits = sd.precision.digits();
    Json evs = Json::array();
    for (const auto& ev : sd.eigenvalues) {
        evs.push_back(Json{{"value", ev.value.to_decimal(digits)},
                           {"interval", Json::array({to_string(ev.interval.lo), to_string(ev.interval.hi)})},
                           {"multiplicity", ev.multiplicity}});
    }
    Json table = Json::array();
    for (const auto& row : sd.coeff) table.push_back(reals(row, digits));
    Json out{{"digits", digits}, {"eigenvalues", evs}, {"coefficients", table}};
    out["perron"] = sd.perron ? reals(*sd.perron, digits) : Json(nullptr);
    return out;
}

Json to_json(const Partition& p)
{
    Json border = Json::array();
    for (const auto& b : p.borderline) border.push_back(pair_json(b));
    return Json{{"class_of", p.class_of}, {"classes", p.classes}, {"borderline", border}};
}

Json to_json(const CentralityReport& report)
{
    const int digits = report.precision.digits();
    Json out{{"function", report.function}, {"backend", report.backend}};
    if (!report.parameter_name.empty()) out[report.parameter_name] = report.parameter;
    out["digits"] = digits;
    out["values"] = reals(report.values, digits);
    if (report.exact_values) out["exact_values"] = rationals(*report.exact_values);
    out["partition"] = to_json(report.partition);
    out["regular"] = report.partition.single_class();
    return out;
}

std::string to_csv(const CentralityReport& report)
{
    std::ostringstream out;
    const int digits = report.precision.digits();
    out << "vertex,value,digits,class\n";
    for (std::size_t i = 0; i < report.values.size(); ++i)
        out << i << ',' << report.values[i].to_decimal(digits) << ',' << digits << ','
            << report.partition.class_of[i] << '\n';
    return out.str();
}

Json to_json(const EntropyResult& e, int digits)
{
    return Json{{"entropy", real_to_json(e.entropy, digits)},
                {"log_n", real_to_json(e.log_n, digits)},
                {"maximal", e.maximal},
                {"probabilities", reals(e.probabilities, digits)}};
}

Json to_json(const Bracket& b) { return Json::array({to_string(b.lo), to_string(b.hi)}); }

Json to_json(const BetaRoot& root)
{
    // The exact binary endpoints are kept as rationals so the bracket can be
    // re-verified from the text form.
    const int digits = root.precision.digits();
    const int wd = root.working_digits;
    return Json{{"pair", pair_json(root.pair)},
                {"beta", real_to_json(root.midpoint(), digits)},
                {"interval", Json::array({root.lo.to_decimal(digits), root.hi.to_decimal(digits)})},
                {"interval_exact", Json::array({to_string(exact_value(root.lo)), to_string(exact_value(root.hi))})},
                {"residual", real_to_json(root.residual, 6)},
                {"digits", digits},
                {"working_digits", wd},
                {"escalations", root.escalations}};
}

Json to_json(const RationalProbe& probe, int digits)
{
    return Json{{"max_denominator", probe.max_denominator},
                {"nearest", to_string(probe.nearest)},
                {"distance", real_to_json(probe.distance, std::min(digits, 12))},
                {"passed", probe.passed}};
}

Json to_json(const RegularityReport& report)
{
    const int digits = report.precision.digits();
    Json pairs = Json::array();
    for (const auto& ps : report.pairs) {
        Json brackets = Json::array();
        for (const auto& b : ps.scan.brackets) brackets.push_back(to_json(b));
        Json near = Json::array();
        for (const auto& b : ps.scan.near_zero) near.push_back(to_string(b));
        Json roots = Json::array();
        for (const auto& r : ps.roots) roots.push_back(to_json(r));
        pairs.push_back(Json{{"pair", pair_json(ps.pair)}, {"brackets", brackets}, {"near_zero", near}, {"roots", roots}});
    }
    Json cands = Json::array();
    for (const auto& c : report.candidates) {
        cands.push_back(Json{{"beta", real_to_json(c.beta, digits)},
                             {"max_residual", real_to_json(c.max_residual, 6)},
                             {"probe", to_json(c.probe, digits)}});
    }
    return Json{{"digits", digits}, {"cospectral_class", report.cospectral_class}, {"pairs", pairs}, {"candidates", cands}};
}

} // namespace cospectra
