#include "mlsp/link_tree.h"

#include <algorithm>
#include <stdexcept>

namespace mlsp {

namespace {

void check_range(std::size_t a, std::size_t b, std::size_t m) {
    if (a > b || b >= m) throw std::out_of_range("link store: bad index range");
}

void merge_low(std::vector<int>& acc, const int* vals, int n) {
    for (int i = 0; i < n; ++i) acc.push_back(vals[i]);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    if (acc.size() > 3) acc.resize(3);
}

}  // namespace

void ArrayLinkStore::assign(std::size_t a, std::size_t b, int value, int provenance) {
    check_range(a, b, size());
    for (std::size_t i = a; i <= b; ++i) value_[i] = std::min(value, kInfLinks), prov_[i] = provenance;
}

void ArrayLinkStore::relax(std::size_t a, std::size_t b, int value, int provenance) {
    check_range(a, b, size());
    if (value >= kInfLinks) return;
    for (std::size_t i = a; i <= b; ++i)
        if (value < value_[i]) value_[i] = value, prov_[i] = provenance;
}

RangeMin ArrayLinkStore::range_min(std::size_t a, std::size_t b) {
    check_range(a, b, size());
    RangeMin r;
    r.index = a;
    r.provenance = prov_[a];
    r.value = value_[a];
    for (std::size_t i = a + 1; i <= b; ++i)
        if (value_[i] < r.value) r = {value_[i], i, prov_[i]};
    return r;
}

int ArrayLinkStore::range_max(std::size_t a, std::size_t b) {
    check_range(a, b, size());
    return *std::max_element(value_.begin() + static_cast<long>(a), value_.begin() + static_cast<long>(b) + 1);
}

std::vector<int> ArrayLinkStore::three_smallest(std::size_t a, std::size_t b) {
    check_range(a, b, size());
    std::vector<int> v(value_.begin() + static_cast<long>(a), value_.begin() + static_cast<long>(b) + 1);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() > 3) v.resize(3);
    return v;
}

LinkTree::LinkTree(std::size_t m) : m_(m), nodes_(m == 0 ? 1 : 4 * m) {
    if (m == 0) return;
    // Every leaf starts at infinity; give each node its leftmost index.
    struct Init {
        LinkTree& t;
        void run(std::size_t v, std::size_t lo, std::size_t hi) {
            t.nodes_[v].argmin = lo;
            if (lo == hi) return;
            std::size_t mid = (lo + hi) / 2;
            run(2 * v, lo, mid);
            run(2 * v + 1, mid + 1, hi);
        }
    };
    Init{*this}.run(1, 0, m - 1);
}

void LinkTree::set_uniform(std::size_t v, std::size_t lo, int value, int prov) {
    Node& n = nodes_[v];
    value = std::min(value, kInfLinks);
    n.lambda = n.upper = value;
    n.argmin = lo;
    n.prov = prov;
    n.low = {value, kInfLinks, kInfLinks};
    n.nlow = 1;
    n.uniform = true;
    n.capped = false;
    n.pend_value = value;
    n.pend_prov = prov;
}

// Applies M(i) := min(M(i), value) to every index of node v.
void LinkTree::set_cap(std::size_t v, std::size_t lo, int value, int prov) {
    Node& n = nodes_[v];
    if (value >= n.upper) return;
    if (value < n.lambda) {
        // Every value drops to the cap: the node becomes uniform.
        set_uniform(v, lo, value, prov);
        return;
    }
    // lambda <= value < upper. With value == lambda every index reaches the
    // minimum, so the leftmost one is lo; it keeps its provenance only if it
    // already held the minimum.
    if (value == n.lambda && n.argmin != lo) {
        n.argmin = lo;
        n.prov = prov;
    }
    n.upper = value;
    int kept = 0;
    std::array<int, 3> low{};
    for (int i = 0; i < n.nlow && kept < 3; ++i)
        if (n.low[i] < value) low[kept++] = n.low[i];
    if (kept < 3) low[kept++] = value;
    for (int i = kept; i < 3; ++i) low[i] = kInfLinks;
    n.low = low;
    n.nlow = kept;
    if (n.uniform) {
        // Unreachable with lambda < upper, kept for completeness.
        n.pend_value = std::min(n.pend_value, value);
    } else if (!n.capped || value < n.pend_value) {
        n.capped = true;
        n.pend_value = value;
        n.pend_prov = prov;
    }
}

void LinkTree::push_down(std::size_t v, std::size_t lo, std::size_t hi) {
    Node& n = nodes_[v];
    if (lo == hi) {
        n.uniform = n.capped = false;
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    if (n.uniform) {
        set_uniform(2 * v, lo, n.pend_value, n.pend_prov);
        set_uniform(2 * v + 1, mid + 1, n.pend_value, n.pend_prov);
    } else if (n.capped) {
        set_cap(2 * v, lo, n.pend_value, n.pend_prov);
        set_cap(2 * v + 1, mid + 1, n.pend_value, n.pend_prov);
    }
    n.uniform = n.capped = false;
}

void LinkTree::pull_up(std::size_t v) {
    Node& n = nodes_[v];
    const Node& l = nodes_[2 * v];
    const Node& r = nodes_[2 * v + 1];
    if (l.lambda <= r.lambda) {
        n.lambda = l.lambda, n.argmin = l.argmin, n.prov = l.prov;
    } else {
        n.lambda = r.lambda, n.argmin = r.argmin, n.prov = r.prov;
    }
    n.upper = std::max(l.upper, r.upper);
    std::vector<int> acc;
    merge_low(acc, l.low.data(), l.nlow);
    merge_low(acc, r.low.data(), r.nlow);
    n.nlow = static_cast<int>(acc.size());
    for (int i = 0; i < 3; ++i) n.low[i] = i < n.nlow ? acc[i] : kInfLinks;
}

void LinkTree::assign(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, int value,
                      int prov) {
    if (b < lo || hi < a) return;
    if (a <= lo && hi <= b) {
        set_uniform(v, lo, value, prov);
        if (lo == hi) nodes_[v].uniform = false;
        return;
    }
    push_down(v, lo, hi);
    std::size_t mid = (lo + hi) / 2;
    assign(2 * v, lo, mid, a, b, value, prov);
    assign(2 * v + 1, mid + 1, hi, a, b, value, prov);
    pull_up(v);
}

void LinkTree::relax(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, int value,
                     int prov) {
    if (b < lo || hi < a || value >= nodes_[v].upper) return;
    if (a <= lo && hi <= b) {
        set_cap(v, lo, value, prov);
        if (lo == hi) nodes_[v].uniform = nodes_[v].capped = false;
        return;
    }
    push_down(v, lo, hi);
    std::size_t mid = (lo + hi) / 2;
    relax(2 * v, lo, mid, a, b, value, prov);
    relax(2 * v + 1, mid + 1, hi, a, b, value, prov);
    pull_up(v);
}

void LinkTree::query(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, RangeMin& best,
                     int& mx, std::vector<int>& low) {
    if (b < lo || hi < a) return;
    const Node& n = nodes_[v];
    if (a <= lo && hi <= b) {
        if (n.lambda < best.value) best = {n.lambda, n.argmin, n.prov};
        mx = std::max(mx, n.upper);
        merge_low(low, n.low.data(), n.nlow);
        return;
    }
    push_down(v, lo, hi);
    std::size_t mid = (lo + hi) / 2;
    query(2 * v, lo, mid, a, b, best, mx, low);
    query(2 * v + 1, mid + 1, hi, a, b, best, mx, low);
}

void LinkTree::assign(std::size_t a, std::size_t b, int value, int provenance) {
    check_range(a, b, m_);
    assign(1, 0, m_ - 1, a, b, value, provenance);
}

void LinkTree::relax(std::size_t a, std::size_t b, int value, int provenance) {
    check_range(a, b, m_);
    if (value >= kInfLinks) return;
    relax(1, 0, m_ - 1, a, b, value, provenance);
}

RangeMin LinkTree::range_min(std::size_t a, std::size_t b) {
    check_range(a, b, m_);
    RangeMin best;
    best.value = kInfLinks + 1;
    int mx = 0;
    std::vector<int> low;
    query(1, 0, m_ - 1, a, b, best, mx, low);
    return best;
}

int LinkTree::range_max(std::size_t a, std::size_t b) {
    check_range(a, b, m_);
    RangeMin best;
    int mx = 0;
    std::vector<int> low;
    query(1, 0, m_ - 1, a, b, best, mx, low);
    return mx;
}

std::vector<int> LinkTree::three_smallest(std::size_t a, std::size_t b) {
    check_range(a, b, m_);
    RangeMin best;
    int mx = 0;
    std::vector<int> low;
    query(1, 0, m_ - 1, a, b, best, mx, low);
    return low;
}

bool LinkTree::consistent() const { return m_ == 0 || consistent(1, 0, m_ - 1); }

bool LinkTree::consistent(std::size_t v, std::size_t lo, std::size_t hi) const {
    const Node& n = nodes_[v];
    if (n.lambda > n.upper) return false;
    if (lo == hi || n.uniform || n.capped) return true;
    std::size_t mid = (lo + hi) / 2;
    const Node& l = nodes_[2 * v];
    const Node& r = nodes_[2 * v + 1];
    if (n.lambda != std::min(l.lambda, r.lambda) || n.upper != std::max(l.upper, r.upper)) return false;
    return consistent(2 * v, lo, mid) && consistent(2 * v + 1, mid + 1, hi);
}

}  // namespace mlsp
