#ifndef PEDPOD_ENUMERATION_HPP
#define PEDPOD_ENUMERATION_HPP

#include <iterator>
#include <vector>

#include "pedpod/partition.hpp"

namespace pedpod {

/* Range over the partitions of n in lexicographically decreasing order,
 * starting from (n) and ending at (1,...,1). n == 0 yields the empty
 * partition once.
 *
 *     for (const Partition &p : partitions_of(5)) ...
 */
class PartitionStream {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition *;
        using reference = const Partition &;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator &operator++();
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const { return done_; }

    private:
        friend class PartitionStream;
        explicit iterator(Part n);

        std::vector<Part> parts_;
        Partition current_;
        bool done_ = true;
    };

    explicit PartitionStream(Part n);

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    Part n_;
};

/// Throws DomainError for n < 0.
PartitionStream partitions_of(Part n);

struct ClassListing {
    Part n = 0;
    ClassId cls = ClassId::All;
    /// lexicographically decreasing
    std::vector<Partition> members;
};

ClassListing class_members(Part n, ClassId c);

} // namespace pedpod

#endif
