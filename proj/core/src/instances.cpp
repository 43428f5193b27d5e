#include "mmipm/instances.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "mmipm/errors.hpp"
#include "mmipm/spectral.hpp"

namespace mmipm {

namespace {

// Largest divisor of n not exceeding sqrt(n); gives the most square grid.
std::size_t grid_rows(std::size_t n) {
    std::size_t best = 1;
    for (std::size_t r = 1; r * r <= n; ++r)
        if (n % r == 0) best = r;
    return best;
}

SparseSymMatrix grid_laplacian(std::size_t n, double gamma) {
    const std::size_t rows = grid_rows(n);
    const std::size_t cols = n / rows;
    std::vector<Triplet> t;
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    std::vector<double> degree(n, 0.0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                t.push_back({id(r, c + 1), id(r, c), -1.0});
                degree[id(r, c)] += 1.0;
                degree[id(r, c + 1)] += 1.0;
            }
            if (r + 1 < rows) {
                t.push_back({id(r + 1, c), id(r, c), -1.0});
                degree[id(r, c)] += 1.0;
                degree[id(r + 1, c)] += 1.0;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, degree[i] + gamma});
    return SparseSymMatrix::from_lower_triplets(n, t);
}

SparseSymMatrix er_graph_laplacian(std::size_t n, double p, double gamma, SplitMix64& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next_double() < p) edges.emplace_back(i, j);

    // Largest connected component, re-indexed in ascending vertex order.
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = ncomp;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    q.push(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::size_t> comp_size(ncomp, 0);
    for (std::size_t i = 0; i < n; ++i) ++comp_size[comp[i]];
    const int biggest = static_cast<int>(
        std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());

    std::vector<std::size_t> new_id(n, n);
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (comp[i] == biggest) new_id[i] = m++;

    std::vector<Triplet> t;
    std::vector<double> degree(m, 0.0);
    for (const auto& [i, j] : edges) {
        if (comp[i] != biggest) continue;
        const std::size_t a = new_id[i], b = new_id[j];
        t.push_back({std::max(a, b), std::min(a, b), -1.0});
        degree[a] += 1.0;
        degree[b] += 1.0;
    }
    for (std::size_t i = 0; i < m; ++i) t.push_back({i, i, degree[i] + gamma});
    return SparseSymMatrix::from_lower_triplets(m, t);
}

SparseSymMatrix random_diag_dominant(std::size_t n, SplitMix64& rng) {
    // A = sI - C with C symmetric non-negative and row sums of C at most
    // s*(1 - margin), margin 5%.
    constexpr double kMargin = 0.05;
    std::vector<std::vector<double>> weight(n);
    std::vector<std::vector<std::size_t>> nbr(n);
    auto has_edge = [&](std::size_t i, std::size_t j) {
        for (std::size_t v : nbr[i])
            if (v == j) return true;
        return false;
    };
    const std::size_t degree = std::min<std::size_t>(4, n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < degree; ++k) {
            const std::size_t j = rng.below(n);
            const double w = rng.uniform(0.5, 1.5);
            if (j == i || has_edge(i, j)) continue;
            nbr[i].push_back(j);
            weight[i].push_back(w);
            nbr[j].push_back(i);
            weight[j].push_back(w);
        }
    }
    double max_row = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double w : weight[i]) s += w;
        max_row = std::max(max_row, s);
    }
    const double s = std::max(1.0, max_row / (1.0 - kMargin));
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < n; ++i) {
        t.push_back({i, i, s});
        for (std::size_t k = 0; k < nbr[i].size(); ++k)
            if (nbr[i][k] < i) t.push_back({i, nbr[i][k], -weight[i][k]});
    }
    return SparseSymMatrix::from_lower_triplets(n, t);
}

SparseSymMatrix random_diagonal(std::size_t n, SplitMix64& rng) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, rng.uniform(0.5, 2.0)});
    return SparseSymMatrix::from_lower_triplets(n, t);
}

DenseVector make_b(const InstanceSpec& spec, std::size_t m, SplitMix64& rng) {
    switch (spec.b_mode) {
        case BMode::Zero: return zeros(m);
        case BMode::Ones: return ones(m);
        case BMode::RandomPm: {
            DenseVector b(m);
            for (std::size_t i = 0; i < m; ++i) b[i] = (rng.next() & 1u) ? 1.0 : -1.0;
            return b;
        }
        case BMode::ScaledRandom: {
            DenseVector b(m);
            for (std::size_t i = 0; i < m; ++i) b[i] = rng.uniform(-1.0, 1.0);
            const double nb = norm2(b);
            if (nb > 0.0)
                for (double& v : b) v *= spec.b_scale / nb;
            return b;
        }
    }
    throw std::invalid_argument("unknown b_mode");
}

}  // namespace

Instance generate(const InstanceSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generate: n must be positive");
    const bool laplacian =
        spec.family == Family::GridLaplacian || spec.family == Family::ErGraphLaplacian;
    if (laplacian && !(spec.gamma > 0.0))
        throw std::invalid_argument("generate: Laplacian families require gamma > 0");
    if (spec.family == Family::ErGraphLaplacian && !(spec.density > 0.0 && spec.density <= 1.0))
        throw std::invalid_argument("generate: ER family requires density in (0, 1]");

    SplitMix64 rng(spec.seed);
    SparseSymMatrix a = [&] {
        switch (spec.family) {
            case Family::GridLaplacian: return grid_laplacian(spec.n, spec.gamma);
            case Family::ErGraphLaplacian:
                return er_graph_laplacian(spec.n, spec.density, spec.gamma, rng);
            case Family::RandomDiagDominant: return random_diag_dominant(spec.n, rng);
            case Family::Diagonal: return random_diagonal(spec.n, rng);
        }
        throw std::invalid_argument("unknown family");
    }();

    try {
        certify_mmatrix(a);
    } catch (const std::exception& e) {
        throw CertificationFailedError(std::string("generated matrix failed certification: ") +
                                       e.what());
    }
    DenseVector b = make_b(spec, a.n(), rng);
    return {std::move(a), std::move(b)};
}

const char* family_name(Family f) {
    switch (f) {
        case Family::GridLaplacian: return "grid-laplacian";
        case Family::ErGraphLaplacian: return "er-graph-laplacian";
        case Family::RandomDiagDominant: return "random-dd";
        case Family::Diagonal: return "diagonal";
    }
    return "?";
}

bool parse_family(const std::string& name, Family& out) {
    if (name == "grid-laplacian" || name == "grid") out = Family::GridLaplacian;
    else if (name == "er-graph-laplacian" || name == "er") out = Family::ErGraphLaplacian;
    else if (name == "random-dd") out = Family::RandomDiagDominant;
    else if (name == "diagonal") out = Family::Diagonal;
    else return false;
    return true;
}

bool parse_b_mode(const std::string& name, BMode& out) {
    if (name == "zero") out = BMode::Zero;
    else if (name == "ones") out = BMode::Ones;
    else if (name == "random-pm") out = BMode::RandomPm;
    else if (name == "scaled-random") out = BMode::ScaledRandom;
    else return false;
    return true;
}

}  // namespace mmipm
