#include "cospectra/miner.hpp"

#include "cospectra/error.hpp"
#include "cospectra/exact_walks.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <thread>

namespace cospectra {

std::string to_string(Predicate p)
{
    switch (p) {
    case Predicate::CospectralNonAutomorphic: return "cospectral-nonauto";
    case Predicate::WalkRegular: return "walk-regular";
    case Predicate::CrossingPair: return "crossing-pair";
    case Predicate::RegularityCandidate: return "regularity-candidate";
    }
    return "unknown";
}

Predicate parse_predicate(std::string_view name)
{
    for (auto p : {Predicate::CospectralNonAutomorphic, Predicate::WalkRegular, Predicate::CrossingPair,
                   Predicate::RegularityCandidate})
        if (name == to_string(p)) return p;
    throw InvalidArgument("unknown predicate '" + std::string(name) + "'");
}

namespace {

using WalkRows = std::vector<std::vector<std::uint64_t>>;

// Closed-walk counts r = 1..L in machine integers for the largest L <= length
// that does not overflow.
WalkRows machine_walk_prefix(const Graph& g, std::size_t length)
{
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::uint64_t> a(n * n, 0);
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e.from) * n + static_cast<std::size_t>(e.to)] = 1;
        a[static_cast<std::size_t>(e.to) * n + static_cast<std::size_t>(e.from)] = 1;
    }
    WalkRows rows(n);
    std::vector<std::uint64_t> power = a;
    std::vector<std::uint64_t> next(n * n);
    for (std::size_t r = 1; r <= length; ++r) {
        if (r > 1) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!a[k * n + j]) continue;
                        if (__builtin_add_overflow(acc, power[i * n + k], &acc)) return rows;
                    }
                    next[i * n + j] = acc;
                }
            std::swap(power, next);
        }
        for (std::size_t i = 0; i < n; ++i) rows[i].push_back(power[i * n + i]);
    }
    return rows;
}

std::optional<WalkRows> machine_walk_rows(const Graph& g, std::size_t length)
{
    WalkRows rows = machine_walk_prefix(g, length);
    if (!rows.empty() && rows.front().size() < length) return std::nullopt;
    return rows;
}

template <typename Row>
std::vector<int> classes_of(const std::vector<Row>& rows)
{
    std::map<Row, int> ids;
    std::vector<int> cls(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        cls[i] = ids.emplace(rows[i], static_cast<int>(ids.size())).first->second;
    return cls;
}

std::vector<int> representatives(const std::vector<int>& cls)
{
    std::vector<int> rep;
    for (std::size_t v = 0; v < cls.size(); ++v)
        if (static_cast<std::size_t>(cls[v]) == rep.size()) rep.push_back(static_cast<int>(v));
    return rep;
}

// Double-precision scan of every representative pair on the solver's grid.
// At each grid point the sign of the difference g is taken from whichever of
// two estimates has a certified margin: the power series in exact walk-count
// differences (good for small beta) or the double eigendecomposition (good
// once g is not tiny relative to e^{beta rho}). A pair is kept when some grid
// point is uncertain, the sign changes, or |g| might fall below `floor`; every
// other pair has no bracket and no near-zero point at high precision either.
std::vector<VertexPair> double_precision_flags(const Graph& g, const std::vector<int>& rep, const ScanOptions& scan,
                                               double floor)
{
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        a(e.from, e.to) = e.weight.get_d();
        a(e.to, e.from) = e.weight.get_d();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const Eigen::VectorXd lambda = es.eigenvalues();
    const Eigen::MatrixXd weights = es.eigenvectors().array().square().matrix();
    const double rho = std::max(std::abs(lambda(0)), std::abs(lambda(n - 1))) * (1 + 1e-12) + 1e-12;

    // |w_r(i) - w_r(j)| <= rho^r bounds the series tail.
    const WalkRows walks = machine_walk_prefix(g, 40);
    const std::size_t terms = walks.front().size();

    const Rational ratio = scan.beta_max / scan.step;
    const long count = Integer(ratio.get_num() / ratio.get_den()).get_si();
    const double step = scan.step.get_d();
    const std::size_t np = rep.size() * (rep.size() - 1) / 2;
    std::vector<char> flagged(np, 0);
    std::vector<int> last_sign(np, 0);

    std::vector<std::vector<long double>> dw(np);
    {
        std::size_t idx = 0;
        for (std::size_t x = 0; x < rep.size(); ++x)
            for (std::size_t y = x + 1; y < rep.size(); ++y, ++idx)
                for (std::size_t r = 0; r < terms; ++r) {
                    const auto wi = walks[static_cast<std::size_t>(rep[x])][r];
                    const auto wj = walks[static_cast<std::size_t>(rep[y])][r];
                    dw[idx].push_back(wi >= wj ? static_cast<long double>(wi - wj)
                                               : -static_cast<long double>(wj - wi));
                }
    }

    Eigen::VectorXd ex(n);
    std::vector<long double> coef(terms);
    for (long k = 1; k <= count; ++k) {
        const double beta = step * static_cast<double>(k);
        for (Eigen::Index h = 0; h < n; ++h) ex(h) = std::exp(beta * lambda(h));
        const Eigen::VectorXd sc = weights * ex;

        long double c = 1;
        for (std::size_t r = 0; r < terms; ++r) {
            c *= static_cast<long double>(beta) / static_cast<long double>(r + 1);
            coef[r] = c;
        }
        const long double x = static_cast<long double>(beta * rho);
        long double tail = std::exp(x);
        for (std::size_t r = 1; r <= terms + 1; ++r) tail *= x / static_cast<long double>(r);
        const double spectral_err = 1e-11 * (1 + beta * rho) * std::exp(beta * rho);
        // Past this point the tail bound alone exceeds any walk-count term.
        const bool use_series = tail < 1;

        std::size_t idx = 0;
        for (std::size_t x0 = 0; x0 < rep.size(); ++x0) {
            for (std::size_t y0 = x0 + 1; y0 < rep.size(); ++y0, ++idx) {
                if (flagged[idx]) continue;
                long double series = 0;
                long double magnitude = 0;
                for (std::size_t r = 0; use_series && r < terms; ++r) {
                    const long double t = coef[r] * dw[idx][r];
                    series += t;
                    magnitude += std::abs(t);
                }
                const long double series_err = tail + 1e-15L * magnitude;
                const double spectral = sc(rep[x0]) - sc(rep[y0]);

                int s = 0;
                long double lower = 0;
                if (use_series && std::abs(series) > series_err) {
                    s = series > 0 ? 1 : -1;
                    lower = std::abs(series) - series_err;
                }
                if (std::abs(spectral) > spectral_err && std::abs(spectral) - spectral_err > lower) {
                    s = spectral > 0 ? 1 : -1;
                    lower = std::abs(spectral) - spectral_err;
                }
                if (s == 0 || lower < 10 * static_cast<long double>(floor) ||
                    (last_sign[idx] != 0 && s != last_sign[idx])) {
                    flagged[idx] = 1;
                    continue;
                }
                last_sign[idx] = s;
            }
        }
    }

    std::vector<VertexPair> out;
    std::size_t idx = 0;
    for (std::size_t x = 0; x < rep.size(); ++x)
        for (std::size_t y = x + 1; y < rep.size(); ++y, ++idx)
            if (flagged[idx]) out.push_back({rep[x], rep[y]});
    return out;
}

struct LineResult {
    std::vector<Finding> findings;
    std::vector<MineDiagnostic> diagnostics;
    bool malformed = false;
    bool out_of_range = false;
    bool graph = false;
};

class GraphJob {
public:
    GraphJob(const MineTask& task, std::string g6, std::size_t line)
        : task_(task), g6_(std::move(g6)), line_(line)
    {}

    LineResult run()
    {
        LineResult res;
        std::optional<Graph> parsed;
        try {
            parsed = parse_graph6(g6_);
        } catch (const ParseError& e) {
            res.malformed = true;
            res.diagnostics.push_back({line_, std::string("malformed graph6: ") + e.what()});
            return res;
        }
        const Graph& g = *parsed;
        if (g.order() < task_.min_order || g.order() > task_.max_order) {
            res.out_of_range = true;
            return res;
        }
        res.graph = true;
        graph_ = &g;
        a_ = adjacency_matrix(g);
        const std::size_t n = a_.dim();

        if (n > 1) {
            if (task_.cheap_filters) machine_rows_ = machine_walk_rows(g, n - 1);
            cheap_classes_ = machine_rows_ ? classes_of(*machine_rows_) : cospectral_classes(a_);
        } else {
            cheap_classes_.assign(n, 0);
        }

        for (auto p : task_.predicates) {
            try {
                switch (p) {
                case Predicate::CospectralNonAutomorphic: cospectral_nonauto(res); break;
                case Predicate::WalkRegular: walk_regular_graph(res); break;
                case Predicate::CrossingPair: crossing_pairs(res); break;
                case Predicate::RegularityCandidate: regularity_candidate(res); break;
                }
            } catch (const Error& e) {
                res.diagnostics.push_back({line_, to_string(p) + ": " + e.what()});
            }
        }
        return res;
    }

private:
    Finding make(Predicate p) const
    {
        Finding f;
        f.graph6 = g6_;
        f.line = line_;
        f.predicate = p;
        f.precision = task_.precision;
        return f;
    }

    const WalkTable& exact_walks()
    {
        if (!walks_) walks_ = walk_counts(a_, std::max<std::size_t>(a_.dim() - 1, 1));
        return *walks_;
    }

    std::vector<Rational> walk_prefix(int v)
    {
        const auto n = a_.dim();
        std::vector<Rational> out;
        if (machine_rows_) {
            for (auto w : (*machine_rows_)[static_cast<std::size_t>(v)]) out.emplace_back(Integer(std::to_string(w)));
            return out;
        }
        const auto& row = exact_walks().row(static_cast<std::size_t>(v));
        out.assign(row.begin(), row.begin() + static_cast<long>(n - 1));
        return out;
    }

    void cospectral_nonauto(LineResult& res)
    {
        const std::size_t n = a_.dim();
        if (n < 2) return;
        if (task_.cheap_filters) {
            std::map<int, int> sizes;
            for (int c : cheap_classes_) ++sizes[c];
            if (std::none_of(sizes.begin(), sizes.end(), [](auto& kv) { return kv.second > 1; })) return;
        }
        // Machine walk counts are exact when they did not overflow.
        auto same = [&](int i, int j) {
            if (machine_rows_) return (*machine_rows_)[static_cast<std::size_t>(i)] == (*machine_rows_)[static_cast<std::size_t>(j)];
            return cospectral(exact_walks(), {i, j});
        };
        for (int i = 0; i < static_cast<int>(n); ++i) {
            for (int j = i + 1; j < static_cast<int>(n); ++j) {
                if (!same(i, j)) continue;
                if (automorphism_maps(*graph_, {i, j}, task_.automorphism_bound)) continue;
                Finding f = make(Predicate::CospectralNonAutomorphic);
                f.pair = VertexPair{i, j};
                f.walk_prefix = walk_prefix(i);
                res.findings.push_back(std::move(f));
            }
        }
    }

    void walk_regular_graph(LineResult& res)
    {
        const std::size_t n = a_.dim();
        if (task_.cheap_filters) {
            const auto deg = graph_->degrees();
            if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) return;
            if (std::any_of(cheap_classes_.begin(), cheap_classes_.end(), [](int c) { return c != 0; })) return;
        }
        if (!walk_regular(a_)) return;
        Finding f = make(Predicate::WalkRegular);
        if (n > 1) f.walk_prefix = walk_prefix(0);
        res.findings.push_back(std::move(f));
    }

    // The scan's near-zero threshold 10^(-P/2) at the base precision.
    double near_zero_floor() const { return std::pow(10.0, -task_.precision.digits() / 2); }

    std::vector<VertexPair> candidate_pairs()
    {
        const auto rep = representatives(cheap_classes_);
        if (task_.cheap_filters) return double_precision_flags(*graph_, rep, task_.scan, near_zero_floor());
        std::vector<VertexPair> all;
        for (std::size_t x = 0; x < rep.size(); ++x)
            for (std::size_t y = x + 1; y < rep.size(); ++y) all.push_back({rep[x], rep[y]});
        return all;
    }

    const SpectralData& spectral(const Precision& prec)
    {
        auto it = spectral_.find(prec.digits());
        if (it == spectral_.end()) it = spectral_.emplace(prec.digits(), decompose(a_, prec)).first;
        return it->second;
    }

    // Roots of one pair at `prec`; nullopt if the result is borderline and
    // should be redone at the escalated precision.
    std::optional<std::vector<BetaRoot>> pair_roots(VertexPair p, const Precision& prec, bool last_chance,
                                                    LineResult& res)
    {
        DiffFunction df;
        try {
            df = build_diff(spectral(prec), p);
        } catch (const PrecisionError&) {
            if (!last_chance) return std::nullopt;
            throw;
        }
        if (df.identically_zero) return std::vector<BetaRoot>{};
        const ScanResult scan = scan_roots(df, task_.scan);
        if (!scan.near_zero.empty() && !last_chance) return std::nullopt;
        for (const auto& b : scan.near_zero)
            res.diagnostics.push_back({line_, "crossing-pair: pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                                  ") nearly touches zero at beta=" + to_string(b) + " without crossing"});
        std::vector<BetaRoot> roots;
        for (const auto& br : scan.brackets) {
            try {
                roots.push_back(refine_root(df, br, task_.precision));
            } catch (const SpuriousBracket&) {
                if (!last_chance) return std::nullopt;
                res.diagnostics.push_back({line_, "crossing-pair: spurious bracket dropped"});
            } catch (const PrecisionError&) {
                if (!last_chance) return std::nullopt;
                throw;
            }
        }
        return roots;
    }

    void crossing_pairs(LineResult& res)
    {
        if (graph_->directed() || a_.dim() < 2) return;
        for (const auto& p : candidate_pairs()) {
            auto roots = pair_roots(p, task_.precision, false, res);
            if (!roots) roots = pair_roots(p, task_.escalated, true, res);
            for (auto& r : *roots) {
                Finding f = make(Predicate::CrossingPair);
                f.pair = p;
                f.root = std::move(r);
                res.findings.push_back(std::move(f));
            }
        }
    }

    void regularity_candidate(LineResult& res)
    {
        if (graph_->directed() || a_.dim() < 2) return;
        if (std::all_of(cheap_classes_.begin(), cheap_classes_.end(), [](int c) { return c == 0; })) return;
        if (task_.cheap_filters) {
            const auto rep = representatives(cheap_classes_);
            const std::size_t pairs = rep.size() * (rep.size() - 1) / 2;
            if (double_precision_flags(*graph_, rep, task_.scan, near_zero_floor()).size() != pairs) return;
        }
        const RegularityReport report = regularity_beta_search(*graph_, task_.precision, task_.scan);
        for (const auto& c : report.candidates) {
            Finding f = make(Predicate::RegularityCandidate);
            f.candidate = c;
            res.findings.push_back(std::move(f));
        }
    }

    const MineTask& task_;
    std::string g6_;
    std::size_t line_;
    const Graph* graph_ = nullptr;
    ExactMatrix a_;
    std::vector<int> cheap_classes_;
    std::optional<WalkRows> machine_rows_;
    std::optional<WalkTable> walks_;
    std::map<int, SpectralData> spectral_;
};

void validate_task(const MineTask& task)
{
    if (task.predicates.empty()) throw InvalidArgument("mine: at least one predicate is required");
    if (task.min_order < 1 || task.max_order > 62 || task.min_order > task.max_order)
        throw InvalidArgument("mine: vertex range must lie within 1..62");
    if (task.workers < 1) throw InvalidArgument("mine: worker count must be positive");
    if (task.chunk_lines == 0) throw InvalidArgument("mine: chunk size must be positive");
}

} // namespace

MineSummary mine(std::istream& input, const MineTask& task, const std::function<void(const Finding&)>& sink)
{
    validate_task(task);
    MineSummary summary;
    const std::size_t batch_lines = task.chunk_lines * static_cast<std::size_t>(task.workers) * 4;

    struct Pending {
        std::string text;
        std::size_t line;
    };
    std::string text;
    std::size_t line_no = 0;
    bool eof = false;
    while (!eof) {
        std::vector<Pending> batch;
        while (batch.size() < batch_lines) {
            if (!std::getline(input, text)) {
                eof = true;
                break;
            }
            ++line_no;
            if (!text.empty() && text.back() == '\r') text.pop_back();
            if (text.empty()) continue;
            batch.push_back({text, line_no});
        }
        if (batch.empty()) break;

        std::vector<LineResult> results(batch.size());
        const std::size_t chunks = (batch.size() + task.chunk_lines - 1) / task.chunk_lines;
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t c = next++; c < chunks; c = next++) {
                const std::size_t end = std::min(batch.size(), (c + 1) * task.chunk_lines);
                for (std::size_t k = c * task.chunk_lines; k < end; ++k)
                    results[k] = GraphJob(task, batch[k].text, batch[k].line).run();
            }
        };
        const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(task.workers), chunks);
        if (nthreads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        for (auto& r : results) {
            summary.lines += 1;
            if (r.malformed) ++summary.malformed;
            if (r.out_of_range) ++summary.out_of_range;
            if (r.graph) ++summary.graphs;
            for (auto& d : r.diagnostics) summary.diagnostics.push_back(std::move(d));
            for (const auto& f : r.findings) {
                ++summary.counts[f.predicate];
                sink(f);
            }
        }
    }
    for (auto p : task.predicates) summary.counts.try_emplace(p, 0);
    return summary;
}

Json to_json(const MineSummary& s)
{
    Json counts = Json::object();
    for (const auto& [p, c] : s.counts) counts[to_string(p)] = c;
    Json diags = Json::array();
    for (const auto& d : s.diagnostics) diags.push_back(Json{{"line", d.line}, {"message", d.message}});
    return Json{{"schema", kSchemaVersion}, {"type", "summary"},  {"lines", s.lines},
                {"graphs", s.graphs},       {"out_of_range", s.out_of_range}, {"malformed", s.malformed},
                {"counts", counts},         {"diagnostics", diags}};
}

namespace {

Json rational_array(const std::vector<Rational>& v)
{
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

} // namespace

Json to_json(const Finding& f)
{
    Json w = Json::object();
    switch (f.predicate) {
    case Predicate::CospectralNonAutomorphic:
        w["pair"] = Json::array({f.pair->i, f.pair->j});
        w["walks"] = rational_array(f.walk_prefix);
        break;
    case Predicate::WalkRegular: w["walks"] = rational_array(f.walk_prefix); break;
    case Predicate::CrossingPair: w = to_json(*f.root); break;
    case Predicate::RegularityCandidate: {
        const int digits = f.precision.digits();
        w["beta"] = real_to_json(f.candidate->beta, digits);
        w["beta_exact"] = to_string(exact_value(f.candidate->beta));
        w["max_residual"] = real_to_json(f.candidate->max_residual, 6);
        w["probe"] = to_json(f.candidate->probe, digits);
        break;
    }
    }
    return Json{{"schema", kSchemaVersion}, {"type", "finding"}, {"graph6", f.graph6}, {"line", f.line},
                {"predicate", to_string(f.predicate)}, {"witness", w}};
}

Finding finding_from_json(const Json& j)
{
    try {
        Finding f;
        f.graph6 = j.at("graph6").get<std::string>();
        f.line = j.at("line").get<std::size_t>();
        f.predicate = parse_predicate(j.at("predicate").get<std::string>());
        const Json& w = j.at("witness");
        auto read_pair = [](const Json& p) { return VertexPair{p.at(0).get<int>(), p.at(1).get<int>()}; };
        auto read_walks = [](const Json& arr) {
            std::vector<Rational> v;
            for (const auto& s : arr) v.push_back(parse_rational(s.get<std::string>()));
            return v;
        };
        switch (f.predicate) {
        case Predicate::CospectralNonAutomorphic:
            f.pair = read_pair(w.at("pair"));
            f.walk_prefix = read_walks(w.at("walks"));
            break;
        case Predicate::WalkRegular: f.walk_prefix = read_walks(w.at("walks")); break;
        case Predicate::CrossingPair: {
            const Precision prec(w.at("digits").get<int>());
            f.precision = prec;
            const int wd = w.at("working_digits").get<int>();
            const mpfr_prec_t bits = Precision(wd).bits();
            f.pair = read_pair(w.at("pair"));
            BetaRoot r{*f.pair,
                       Real(parse_rational(w.at("interval_exact").at(0).get<std::string>()), bits),
                       Real(parse_rational(w.at("interval_exact").at(1).get<std::string>()), bits),
                       Real::parse(w.at("residual").at("value").get<std::string>(), bits),
                       prec,
                       wd,
                       w.at("escalations").get<int>()};
            f.root = std::move(r);
            break;
        }
        case Predicate::RegularityCandidate: {
            const Precision prec(w.at("beta").at("digits").get<int>());
            f.precision = prec;
            RegularityCandidate c{Real(parse_rational(w.at("beta_exact").get<std::string>()), prec.bits()),
                                  Real::parse(w.at("max_residual").at("value").get<std::string>(), prec.bits()),
                                  {}};
            c.probe = small_height_probe(c.beta, prec, w.at("probe").at("max_denominator").get<std::uint32_t>());
            f.candidate = std::move(c);
            break;
        }
        }
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("finding: ") + e.what());
    }
}

namespace {

bool verify_root(const Graph& g, const ExactMatrix& a, const BetaRoot& root)
{
    if (g.directed()) return false;
    if (cospectral(a, root.pair)) return false;
    const Precision& prec = root.precision;
    const Precision work(std::max(root.working_digits, prec.digits()));
    const DiffFunction df = build_diff(decompose(a, work), root.pair);

    const mpfr_prec_t bits = work.bits();
    const Real lo = root.lo.rounded_to(bits);
    const Real hi = root.hi.rounded_to(bits);
    if (hi < lo || !(hi - lo < prec.pow10(-prec.digits() + 10))) return false;
    const Real mid = (lo + hi) / Real(2, bits);
    const auto at_mid = df.evaluate(mid);
    if (!(abs(at_mid.value) + at_mid.error < prec.pow10(-prec.digits() + 20))) return false;
    if (lo == hi) return true;
    const auto at_lo = df.evaluate(lo);
    const auto at_hi = df.evaluate(hi);
    if (!(abs(at_lo.value) > at_lo.error) || !(abs(at_hi.value) > at_hi.error)) return false;
    return at_lo.value.sign() != at_hi.value.sign();
}

bool verify_candidate(const Graph& g, const RegularityCandidate& c, const Precision& prec)
{
    if (g.directed()) return false;
    const ExactMatrix a = adjacency_matrix(g);
    const auto cls = cospectral_classes(a);
    const auto rep = representatives(cls);
    if (rep.size() < 2) return false;
    const SpectralData sd = decompose(a, prec);
    const Real bound = prec.pow10(-prec.digits() + 20);
    for (std::size_t x = 0; x < rep.size(); ++x)
        for (std::size_t y = x + 1; y < rep.size(); ++y)
            if (!(abs(build_diff(sd, {rep[x], rep[y]})(c.beta)) < bound)) return false;
    return small_height_probe(c.beta, prec, c.probe.max_denominator).passed;
}

} // namespace

bool verify_finding(const Finding& f)
{
    try {
        const Graph g = parse_graph6(f.graph6);
        const ExactMatrix a = adjacency_matrix(g);
        const std::size_t n = a.dim();
        switch (f.predicate) {
        case Predicate::CospectralNonAutomorphic: {
            if (!f.pair) return false;
            validate_pair(*f.pair, n);
            const WalkTable walks = walk_counts(a, n - 1);
            if (!cospectral(walks, *f.pair)) return false;
            if (f.walk_prefix != walks.row(static_cast<std::size_t>(f.pair->i))) return false;
            return !automorphism_maps(g, *f.pair, g.order());
        }
        case Predicate::WalkRegular: {
            if (!walk_regular(a)) return false;
            if (n == 1) return f.walk_prefix.empty();
            return f.walk_prefix == walk_counts(a, n - 1).row(0);
        }
        case Predicate::CrossingPair:
            if (!f.root || !f.pair || !(*f.pair == f.root->pair)) return false;
            validate_pair(*f.pair, n);
            return verify_root(g, a, *f.root);
        case Predicate::RegularityCandidate:
            if (!f.candidate) return false;
            return verify_candidate(g, *f.candidate, f.precision);
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

} // namespace cospectra
