#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mlsp {

// Link counts saturate at kInfLinks; adding to it yields kInfLinks.
inline constexpr int kInfLinks = 1 << 28;
inline int add_links(int a, int b) { return (a >= kInfLinks || b >= kInfLinks) ? kInfLinks : a + b; }

struct RangeMin {
    int value = kInfLinks;
    std::size_t index = 0;  // smallest index attaining value
    int provenance = -1;    // event that last set M(index)
};

// Baseline link counts M(0..m-1) with range assignment, range relaxation
// (M(i) := min(M(i), v)) and range minimum queries.
class LinkStore {
public:
    virtual ~LinkStore() = default;
    virtual std::size_t size() const = 0;
    virtual void assign(std::size_t a, std::size_t b, int value, int provenance) = 0;
    virtual void relax(std::size_t a, std::size_t b, int value, int provenance) = 0;
    virtual RangeMin range_min(std::size_t a, std::size_t b) = 0;
    virtual int range_max(std::size_t a, std::size_t b) = 0;
    // Up to three smallest distinct values in [a, b], ascending.
    virtual std::vector<int> three_smallest(std::size_t a, std::size_t b) = 0;
};

// Plain array; O(b - a) per operation.
class ArrayLinkStore final : public LinkStore {
public:
    explicit ArrayLinkStore(std::size_t m) : value_(m, kInfLinks), prov_(m, -1) {}
    std::size_t size() const override { return value_.size(); }
    void assign(std::size_t a, std::size_t b, int value, int provenance) override;
    void relax(std::size_t a, std::size_t b, int value, int provenance) override;
    RangeMin range_min(std::size_t a, std::size_t b) override;
    int range_max(std::size_t a, std::size_t b) override;
    std::vector<int> three_smallest(std::size_t a, std::size_t b) override;

private:
    std::vector<int> value_;
    std::vector<int> prov_;
};

// Segment tree over baseline indices. Each node keeps the minimum (lambda)
// and maximum (U) of M over its range, the three smallest distinct values,
// and the index and provenance of its leftmost minimum. Updates stop at the
// canonical nodes of the range and leave a pending uniform value or a pending
// cap (U) for the children, pushed down on the next visit.
class LinkTree final : public LinkStore {
public:
    explicit LinkTree(std::size_t m);
    std::size_t size() const override { return m_; }
    void assign(std::size_t a, std::size_t b, int value, int provenance) override;
    void relax(std::size_t a, std::size_t b, int value, int provenance) override;
    RangeMin range_min(std::size_t a, std::size_t b) override;
    int range_max(std::size_t a, std::size_t b) override;
    std::vector<int> three_smallest(std::size_t a, std::size_t b) override;

    // Checks lambda = min(children), U = max(children) and lambda <= U on
    // every node without pending work. Returns false on a violation.
    bool consistent() const;

private:
    struct Node {
        int lambda = kInfLinks;
        int upper = kInfLinks;
        std::size_t argmin = 0;
        int prov = -1;
        std::array<int, 3> low{kInfLinks, kInfLinks, kInfLinks};
        int nlow = 1;
        // Pending work for the children: uniform value, or a cap on values.
        bool uniform = false;
        bool capped = false;
        int pend_value = kInfLinks;
        int pend_prov = -1;
    };

    void set_uniform(std::size_t v, std::size_t lo, int value, int prov);
    void set_cap(std::size_t v, std::size_t lo, int value, int prov);
    void push_down(std::size_t v, std::size_t lo, std::size_t hi);
    void pull_up(std::size_t v);
    void assign(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, int value, int prov);
    void relax(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, int value, int prov);
    void query(std::size_t v, std::size_t lo, std::size_t hi, std::size_t a, std::size_t b, RangeMin& best, int& mx,
               std::vector<int>& low);
    bool consistent(std::size_t v, std::size_t lo, std::size_t hi) const;

    std::size_t m_;
    std::vector<Node> nodes_;
};

}  // namespace mlsp
