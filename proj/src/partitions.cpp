#include "mzeta/partitions.hpp"

namespace mzeta {

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned i = 0; i < counts.size(); ++i) w += (i + 1) * counts[i];
    return w;
}

unsigned Partition::part_count() const {
    unsigned n = 0;
    for (unsigned c : counts) n += c;
    return n;
}

std::vector<Partition> partitions_of(unsigned r) {
    std::vector<Partition> out;
    for_each_partition(r, [&](const std::vector<unsigned>& c) { out.push_back(Partition{c}); });
    return out;
}

} // namespace mzeta
