#include "certquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace certquad {

Partition::Partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw std::invalid_argument("partition needs at least two nodes");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        if (!std::isfinite(nodes_[i]) || !(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument("partition nodes must be finite and strictly increasing");
    }
    if (!std::isfinite(nodes_.back()))
        throw std::invalid_argument("partition nodes must be finite and strictly increasing");
}

double Partition::mesh() const {
    double m = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) m = std::max(m, h(i));
    return m;
}

Partition uniform_partition(const Interval& domain, std::size_t n) {
    if (n == 0) throw std::invalid_argument("a partition needs at least one interval");
    std::vector<double> nodes(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        nodes[i] = domain.a() + domain.length() * static_cast<double>(i) / static_cast<double>(n);
    nodes.back() = domain.b();
    return Partition(std::move(nodes));
}

namespace {

double rule_on(const IntegrandFunction& f, double lo, double hi) {
    double h = hi - lo;
    return 0.5 * (f.value((3.0 * lo + hi) / 4.0) + f.value((lo + 3.0 * hi) / 4.0)) * h;
}

// One interval's remainder majorant given the norm of f' over it.
double interval_bound(double h, double norm, NormKind kind) {
    switch (kind.tag()) {
        case NormKind::Tag::LInf: return 0.125 * h * h * norm;
        case NormKind::Tag::Lp: {
            double q = kind.conjugate();
            return std::pow(h, 1.0 + 1.0 / q) * norm / (4.0 * std::pow(q + 1.0, 1.0 / q));
        }
        case NormKind::Tag::L1: return 0.25 * h * norm;
    }
    return 0.0;
}

} // namespace

double composite_rule(const IntegrandFunction& f, const Partition& partition) {
    double total = 0.0;
    for (std::size_t i = 0; i < partition.intervals(); ++i)
        total += rule_on(f, partition.nodes()[i], partition.nodes()[i + 1]);
    return total;
}

QuadratureResult remainder_bound(const IntegrandFunction& f, const Partition& partition,
                                 NormKind kind) {
    std::vector<std::pair<double, double>> per_interval;
    per_interval.reserve(partition.intervals());
    double estimate = 0.0;
    double bound_sum = 0.0;
    for (std::size_t i = 0; i < partition.intervals(); ++i) {
        double lo = partition.nodes()[i], hi = partition.nodes()[i + 1];
        double est = rule_on(f, lo, hi);
        double bnd = interval_bound(hi - lo, estimate_norm(f, kind, lo, hi), kind);
        per_interval.emplace_back(est, bnd);
        estimate += est;
        bound_sum += bnd;
    }

    Interval domain = partition.domain();
    double whole = estimate_norm(f, kind, domain.a(), domain.b());
    double aggregate = 0.0;
    switch (kind.tag()) {
        case NormKind::Tag::LInf: {
            double sum_h2 = 0.0;
            for (std::size_t i = 0; i < partition.intervals(); ++i)
                sum_h2 += partition.h(i) * partition.h(i);
            aggregate = 0.125 * whole * sum_h2;
            break;
        }
        case NormKind::Tag::Lp: {
            double q = kind.conjugate();
            double sum_hq = 0.0;
            for (std::size_t i = 0; i < partition.intervals(); ++i)
                sum_hq += std::pow(partition.h(i), q + 1.0);
            aggregate = whole * std::pow(sum_hq, 1.0 / q) / (4.0 * std::pow(q + 1.0, 1.0 / q));
            break;
        }
        case NormKind::Tag::L1:
            aggregate = 0.25 * whole * partition.mesh();
            break;
    }

    return QuadratureResult{estimate, aggregate,  kind, partition, std::move(per_interval),
                            bound_sum, f.exact(), true};
}

namespace {

struct WorkItem {
    double lo, hi;
    double estimate;
    double bound;
    bool operator<(const WorkItem& other) const { return bound < other.bound; }
};

WorkItem make_item(const IntegrandFunction& f, NormKind kind, double lo, double hi) {
    double norm = estimate_norm(f, kind, lo, hi);
    return WorkItem{lo, hi, rule_on(f, lo, hi), interval_bound(hi - lo, norm, kind)};
}

} // namespace

QuadratureResult adaptive_integrate(const IntegrandFunction& f, const Interval& domain,
                                    double tol, NormKind kind, std::size_t cap) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (cap == 0) throw std::invalid_argument("interval cap must be positive");

    // Seed with the kink points so every queue interval has a smooth f'.
    std::vector<double> seed;
    seed.push_back(domain.a());
    for (double k : f.kink_points())
        if (domain.a() < k && k < domain.b()) seed.push_back(k);
    seed.push_back(domain.b());

    std::priority_queue<WorkItem> queue;
    std::vector<WorkItem> frozen;  // too narrow to bisect further
    double total_bound = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + 1 < seed.size(); ++i) {
        WorkItem item = make_item(f, kind, seed[i], seed[i + 1]);
        total_bound += item.bound;
        queue.push(item);
        ++count;
    }

    while (total_bound > tol && count < cap && !queue.empty()) {
        WorkItem worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        if (!(worst.lo < mid && mid < worst.hi)) {
            frozen.push_back(worst);  // interval at floating-point resolution
            continue;
        }
        WorkItem left = make_item(f, kind, worst.lo, mid);
        WorkItem right = make_item(f, kind, mid, worst.hi);
        total_bound += left.bound + right.bound - worst.bound;
        queue.push(left);
        queue.push(right);
        ++count;
    }

    std::vector<WorkItem> items = std::move(frozen);
    while (!queue.empty()) {
        items.push_back(queue.top());
        queue.pop();
    }
    std::sort(items.begin(), items.end(),
              [](const WorkItem& a, const WorkItem& b) { return a.lo < b.lo; });

    std::vector<double> nodes;
    nodes.reserve(items.size() + 1);
    std::vector<std::pair<double, double>> per_interval;
    per_interval.reserve(items.size());
    double estimate = 0.0;
    double bound_sum = 0.0;
    nodes.push_back(items.front().lo);
    for (const WorkItem& it : items) {
        nodes.push_back(it.hi);
        per_interval.emplace_back(it.estimate, it.bound);
        estimate += it.estimate;
        bound_sum += it.bound;
    }

    return QuadratureResult{estimate,  bound_sum, kind,      Partition(std::move(nodes)),
                            std::move(per_interval), bound_sum, f.exact(), bound_sum <= tol};
}

} // namespace certquad
