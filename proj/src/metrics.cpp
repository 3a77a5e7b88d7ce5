#include "pdu/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "pdu/spectral.hpp"

namespace pdu {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// exact distribution of the doubled signed-rank sum over all sign patterns
double exact_two_sided_p(const std::vector<double>& ranks, double w_plus) {
    std::size_t total2 = 0;  // doubled rank sum
    std::vector<std::size_t> r2(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        r2[i] = static_cast<std::size_t>(std::llround(2.0 * ranks[i]));
        total2 += r2[i];
    }
    std::vector<double> count(total2 + 1, 0.0);
    count[0] = 1.0;
    for (std::size_t r : r2)
        for (std::size_t s = total2 + 1; s-- > r;) count[s] += count[s - r];

    const double denom = std::pow(2.0, static_cast<double>(ranks.size()));
    const auto w2 = static_cast<std::size_t>(std::llround(2.0 * w_plus));
    double le = 0.0, ge = 0.0;
    for (std::size_t s = 0; s <= total2; ++s) {
        if (s <= w2) le += count[s];
        if (s >= w2) ge += count[s];
    }
    return std::min(1.0, 2.0 * std::min(le, ge) / denom);
}

}  // namespace

double am_nrmse(const std::vector<cdouble>& component,
                const std::vector<double>& truth_am) {
    if (component.size() != truth_am.size())
        throw std::invalid_argument("am_nrmse: length mismatch");
    const double denom = norm2(truth_am);
    if (denom == 0.0) throw std::invalid_argument("am_nrmse: zero-norm truth");
    double s = 0.0;
    for (std::size_t i = 0; i < component.size(); ++i) {
        const double d = std::abs(component[i]) - truth_am[i];
        s += d * d;
    }
    return std::sqrt(s) / denom;
}

double circular_sd(const std::vector<double>& angles) {
    if (angles.empty())
        throw UndefinedMetricError("circular_sd: no angles");
    cdouble mean(0.0, 0.0);
    for (double a : angles) mean += std::polar(1.0, a);
    const double r = std::abs(mean) / static_cast<double>(angles.size());
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - r)));
}

double phase_sd(const std::vector<cdouble>& component,
                const std::vector<double>& truth_phase_cycles) {
    if (component.size() != truth_phase_cycles.size())
        throw std::invalid_argument("phase_sd: length mismatch");
    const double floor = 1e-12 * detail::max_abs(component);
    std::vector<double> angles;
    angles.reserve(component.size());
    for (std::size_t i = 0; i < component.size(); ++i) {
        const double m = std::abs(component[i]);
        if (m <= floor || m == 0.0) continue;
        const cdouble unit = component[i] / m;
        const double ref = 2.0 * std::numbers::pi * truth_phase_cycles[i];
        angles.push_back(std::arg(unit * std::polar(1.0, -ref)));
    }
    if (angles.empty())
        throw UndefinedMetricError("phase_sd: every sample excluded");
    return circular_sd(angles);
}

double recon_nrmse(const std::vector<double>& f,
                   const std::vector<std::vector<cdouble>>& components) {
    const double denom = norm2(f);
    if (denom == 0.0) throw std::invalid_argument("recon_nrmse: zero-norm signal");
    for (const auto& c : components)
        if (c.size() != f.size())
            throw std::invalid_argument("recon_nrmse: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        double re = 0.0;
        for (const auto& c : components) re += c[i].real();
        const double d = f[i] - re;
        s += d * d;
    }
    return std::sqrt(s) / denom;
}

double mean_if_hz(const std::vector<cdouble>& component, double sample_rate_hz) {
    if (component.size() < 2)
        throw std::invalid_argument("mean_if_hz: need at least 2 samples");
    std::vector<double> phase = unwrap_phase(component);
    const double span_s =
        static_cast<double>(component.size() - 1) / sample_rate_hz;
    return (phase.back() - phase.front()) / (2.0 * std::numbers::pi * span_s);
}

namespace {

void best_assignment(const std::vector<std::vector<double>>& cost,
                     std::size_t row, std::vector<bool>& used,
                     std::vector<std::size_t>& current, double acc,
                     std::vector<std::size_t>& best, double& best_cost) {
    if (row == cost.size()) {
        if (acc < best_cost) {
            best_cost = acc;
            best = current;
        }
        return;
    }
    for (std::size_t col = 0; col < cost[row].size(); ++col) {
        if (used[col]) continue;
        used[col] = true;
        current[row] = col;
        best_assignment(cost, row + 1, used, current, acc + cost[row][col], best,
                        best_cost);
        used[col] = false;
    }
}

}  // namespace

std::vector<std::size_t> match_components(
    const std::vector<std::vector<cdouble>>& components,
    const std::vector<std::vector<double>>& truth_ifs_hz, double sample_rate_hz) {
    const std::size_t nc = components.size(), nt = truth_ifs_hz.size();
    std::vector<double> comp_if(nc), truth_if(nt);
    for (std::size_t i = 0; i < nc; ++i)
        comp_if[i] = mean_if_hz(components[i], sample_rate_hz);
    for (std::size_t j = 0; j < nt; ++j) {
        const auto& v = truth_ifs_hz[j];
        truth_if[j] =
            std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    }

    std::vector<std::size_t> result(nc, static_cast<std::size_t>(-1));
    if (nc == 0 || nt == 0) return result;

    if (nc <= nt) {
        std::vector<std::vector<double>> cost(nc, std::vector<double>(nt));
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t j = 0; j < nt; ++j)
                cost[i][j] = std::abs(comp_if[i] - truth_if[j]);
        std::vector<bool> used(nt, false);
        std::vector<std::size_t> current(nc), best(nc);
        double best_cost = std::numeric_limits<double>::infinity();
        best_assignment(cost, 0, used, current, 0.0, best, best_cost);
        return best;
    }

    // more components than truths: match truths injectively to components,
    // leave the rest unassigned
    std::vector<std::vector<double>> cost(nt, std::vector<double>(nc));
    for (std::size_t j = 0; j < nt; ++j)
        for (std::size_t i = 0; i < nc; ++i)
            cost[j][i] = std::abs(truth_if[j] - comp_if[i]);
    std::vector<bool> used(nc, false);
    std::vector<std::size_t> current(nt), best(nt);
    double best_cost = std::numeric_limits<double>::infinity();
    best_assignment(cost, 0, used, current, 0.0, best, best_cost);
    for (std::size_t j = 0; j < nt; ++j) result[best[j]] = j;
    return result;
}

PairedTestResult wilcoxon_signed_rank(const std::vector<double>& x,
                                      const std::vector<double>& y,
                                      int bonferroni_m) {
    if (x.size() != y.size())
        throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
    if (bonferroni_m < 1)
        throw std::invalid_argument("wilcoxon_signed_rank: bonferroni_m must be >= 1");

    std::vector<double> diff;
    diff.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d != 0.0) diff.push_back(d);
    }
    PairedTestResult res;
    res.bonferroni_m = bonferroni_m;
    res.n = diff.size();
    if (diff.empty()) {
        res.p_value = 1.0;
        res.significant = false;
        return res;
    }

    // midranks of |d|
    const std::size_t n = diff.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(diff[a]) < std::abs(diff[b]);
    });
    std::vector<double> rank(n);
    double tie_correction = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && std::abs(diff[order[j]]) == std::abs(diff[order[i]])) ++j;
        const double mid = 0.5 * static_cast<double>(i + j - 1) + 1.0;
        for (std::size_t k = i; k < j; ++k) rank[order[k]] = mid;
        const auto t = static_cast<double>(j - i);
        tie_correction += t * t * t - t;
        i = j;
    }

    double w_plus = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (diff[i] > 0.0) w_plus += rank[i];
    res.statistic = w_plus;

    if (n <= 25) {
        res.p_value = exact_two_sided_p(rank, w_plus);
    } else {
        const double nn = static_cast<double>(n);
        const double mean = nn * (nn + 1.0) / 4.0;
        const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 -
                           tie_correction / 48.0;
        const double sd = std::sqrt(var);
        double z = 0.0;
        if (w_plus > mean)
            z = (w_plus - mean - 0.5) / sd;
        else if (w_plus < mean)
            z = (w_plus - mean + 0.5) / sd;
        res.p_value = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::abs(z))));
    }
    res.significant = res.p_value < 0.05 / static_cast<double>(bonferroni_m);
    return res;
}

}  // namespace pdu
