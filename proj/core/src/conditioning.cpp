#include "tolfit/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace tolfit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative gap below which sigma_min is treated as zero.
constexpr double kRankEps = 1e-14;

// One-sided Jacobi works on the matrix with rows >= cols, so that the
// rotations act on the smaller column count.
Matrix tall_copy(const Matrix& a) {
    return a.rows() >= a.cols() ? a : a.transposed();
}

}  // namespace

std::vector<double> singular_values(const Matrix& a) {
    Matrix w = tall_copy(a);
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();

    // Column-major working copy so column sweeps touch contiguous memory.
    std::vector<double> col(m * n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) col[j * m + i] = w.at(i, j);

    constexpr double kOrthEps = 1e-15;
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double* cp = &col[p * m];
                double* cq = &col[q * m];
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += cp[i] * cp[i];
                    beta += cq[i] * cq[i];
                    gamma += cp[i] * cq[i];
                }
                if (std::abs(gamma) <= kOrthEps * std::sqrt(alpha * beta))
                    continue;
                // Jacobi rotation annihilating the off-diagonal Gram entry.
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const double vp = cp[i];
                    cp[i] = c * vp - s * cq[i];
                    cq[i] = s * vp + c * cq[i];
                }
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += col[j * m + i] * col[j * m + i];
        sv[j] = std::sqrt(sum);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

double cond2(const Matrix& a) {
    const std::vector<double> sv = singular_values(a);
    const double smax = sv.front();
    const double smin = sv.back();
    if (smax == 0.0 || smin <= kRankEps * smax) return kInf;
    return smax / smin;
}

namespace {

// Index of an interval matrix entry that is free to move.
struct FreeEntry {
    std::size_t i, j;
    double lo, hi;
};

std::vector<FreeEntry> free_entries(const IntervalMatrix& a) {
    std::vector<FreeEntry> out;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Interval& e = a.at(i, j);
            if (!e.is_point()) out.push_back({i, j, e.lo, e.hi});
        }
    return out;
}

// Best point matrix seen so far.  Ties keep the incumbent so the result is
// stable under candidate reordering.
struct Best {
    double value = kInf;
    Matrix point;
    bool any_finite = false;

    void offer(double v, const Matrix& p) {
        if (std::isfinite(v)) any_finite = true;
        if (v < value) {
            value = v;
            point = p;
        }
    }
    void merge(const Best& other) {
        if (other.any_finite) any_finite = true;
        if (other.value < value) {
            value = other.value;
            point = other.point;
        }
    }
};

// Deterministic per-stream seeding (splitmix64 over seed and stream id).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

CondResult min_cond(const IntervalMatrix& a, const AnnealConfig& cfg) {
    const Matrix mid = mid_matrix(a);
    const std::vector<FreeEntry> free = free_entries(a);

    CondResult result;
    result.seed = cfg.seed;

    Best best;
    long evaluations = 0;
    const auto evaluate = [&evaluations](const Matrix& p) {
        ++evaluations;
        return cond2(p);
    };

    best.offer(evaluate(mid), mid);

    if (free.empty()) {
        // Nothing varies: the midpoint is the only member matrix.
        result.min_cond = best.value;
        result.argmin = best.value < kInf ? best.point : mid;
        result.rank_deficient_everywhere = !best.any_finite;
        result.evaluations = evaluations;
        return result;
    }

    // The extreme condition numbers of an interval matrix are often attained
    // at corner matrices, so when the corner count is small enumerate them
    // all; this also makes the search exact for narrow perturbation patterns.
    constexpr std::size_t kExhaustiveLimit = 12;
    if (free.size() <= kExhaustiveLimit) {
        Matrix p = mid;
        const std::size_t corners = std::size_t{1} << free.size();
        for (std::size_t mask = 0; mask < corners; ++mask) {
            for (std::size_t k = 0; k < free.size(); ++k) {
                const FreeEntry& e = free[k];
                p.at(e.i, e.j) = (mask >> k) & 1 ? e.hi : e.lo;
            }
            best.offer(evaluate(p), p);
        }
    }

    const auto random_point = [&free, &mid](std::mt19937_64& rng, bool corner) {
        Matrix p = mid;
        if (corner) {
            for (const FreeEntry& e : free)
                p.at(e.i, e.j) = rng() & 1 ? e.hi : e.lo;
        } else {
            for (const FreeEntry& e : free) {
                std::uniform_real_distribution<double> u(e.lo, e.hi);
                p.at(e.i, e.j) = u(rng);
            }
        }
        return p;
    };

    {
        std::mt19937_64 probe_rng(mix_seed(cfg.seed, 0));
        for (int k = 0; k < cfg.vertex_probes; ++k) {
            const Matrix p = random_point(probe_rng, true);
            best.offer(evaluate(p), p);
        }
        for (int k = 0; k < cfg.interior_probes; ++k) {
            const Matrix p = random_point(probe_rng, false);
            best.offer(evaluate(p), p);
        }
    }

    // Temperature scale matched to the objective magnitude; anything finite
    // works, the cooling schedule ends essentially greedy either way.
    const double mid_cond = best.any_finite ? best.value : 1.0;
    const double t0 = std::isfinite(mid_cond) && mid_cond > 0.0 ? mid_cond : 1.0;

    const auto run_chain = [&](int chain) {
        std::mt19937_64 rng(mix_seed(cfg.seed, 1 + static_cast<std::uint64_t>(chain)));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        Best local;
        long local_evals = 0;
        const auto local_eval = [&local_evals](const Matrix& p) {
            ++local_evals;
            return cond2(p);
        };

        Matrix cur = chain == 0 ? mid : random_point(rng, chain % 2 == 1);
        double cur_val = local_eval(cur);
        local.offer(cur_val, cur);

        double temp = t0;
        for (int step = 0; step < cfg.steps; ++step, temp *= cfg.cooling) {
            Matrix prop = cur;
            for (const FreeEntry& e : free) {
                const double sigma =
                    cfg.proposal_scale * 0.5 * (e.hi - e.lo);
                const double v = prop.at(e.i, e.j) + sigma * gauss(rng);
                prop.at(e.i, e.j) = std::clamp(v, e.lo, e.hi);
            }
            const double prop_val = local_eval(prop);
            local.offer(prop_val, prop);
            if (!std::isfinite(prop_val)) continue;  // never walk onto a singular matrix
            if (!std::isfinite(cur_val) || prop_val <= cur_val ||
                unit(rng) < std::exp(-(prop_val - cur_val) / temp)) {
                cur = std::move(prop);
                cur_val = prop_val;
            }
        }
        return std::pair<Best, long>(std::move(local), local_evals);
    };

    std::vector<std::future<std::pair<Best, long>>> chains;
    chains.reserve(static_cast<std::size_t>(std::max(cfg.restarts, 0)));
    for (int c = 0; c < cfg.restarts; ++c)
        chains.push_back(std::async(std::launch::async, run_chain, c));
    for (auto& fut : chains) {
        auto [local, local_evals] = fut.get();
        best.merge(local);
        evaluations += local_evals;
    }

    result.min_cond = best.value;
    result.argmin = best.any_finite ? best.point : mid;
    result.rank_deficient_everywhere = !best.any_finite;
    result.evaluations = evaluations;
    return result;
}

}  // namespace tolfit
