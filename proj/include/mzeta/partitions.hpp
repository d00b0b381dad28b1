#pragma once

#include <vector>

namespace mzeta {

// Multiplicity vector (c_1, ..., c_r) of an integer partition of r,
// constrained by sum_i i * c_i == r.
struct Partition {
    std::vector<unsigned> counts; // counts[i-1] == c_i

    unsigned weight() const;     // sum i * c_i
    unsigned part_count() const; // sum c_i
};

namespace detail {

template <typename Fn>
void partition_rec(std::vector<unsigned>& counts, unsigned pos, unsigned remaining, Fn& fn) {
    const unsigned r = static_cast<unsigned>(counts.size());
    if (remaining == 0) {
        // counts[pos-1 ..] are all zero here; this is the unique completion
        fn(static_cast<const std::vector<unsigned>&>(counts));
        return;
    }
    if (pos > r || pos > remaining) return; // no part >= pos fits
    for (unsigned v = remaining / pos + 1; v-- > 0;) {
        counts[pos - 1] = v;
        partition_rec(counts, pos + 1, remaining - pos * v, fn);
    }
    counts[pos - 1] = 0;
}

} // namespace detail

// Streams every (c_1, ..., c_r) with sum i*c_i == r exactly once, in
// reverse-lexicographic (descending) order on the count vector, e.g.
// r = 3: (3,0,0), (1,1,0), (0,0,1). r == 0 yields the single empty partition.
template <typename Fn>
void for_each_partition(unsigned r, Fn&& fn) {
    std::vector<unsigned> counts(r, 0u);
    detail::partition_rec(counts, 1u, r, fn);
}

std::vector<Partition> partitions_of(unsigned r);

} // namespace mzeta
