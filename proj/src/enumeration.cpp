#include "pedpod/enumeration.hpp"

namespace pedpod {

PartitionStream::PartitionStream(Part n)
    : n_(n)
{
    if (n < 0)
        throw DomainError("partitions_of: n must be non-negative");
}

PartitionStream partitions_of(Part n)
{
    return PartitionStream(n);
}

PartitionStream::iterator::iterator(Part n)
    : done_(false)
{
    if (n > 0)
        parts_.push_back(n);
    current_ = Partition::from_parts(parts_);
}

PartitionStream::iterator &PartitionStream::iterator::operator++()
{
    // rightmost part that can still be split
    std::size_t i = parts_.size();
    while (i > 0 && parts_[i - 1] == 1)
        --i;
    if (i == 0) {
        done_ = true;
        return *this;
    }
    --i;
    Part remaining = static_cast<Part>(parts_.size() - i - 1) + 1;
    const Part cap = --parts_[i];
    parts_.resize(i + 1);
    while (remaining > 0) {
        const Part next = std::min(cap, remaining);
        parts_.push_back(next);
        remaining -= next;
    }
    current_ = Partition::from_parts(parts_);
    return *this;
}

ClassListing class_members(Part n, ClassId c)
{
    ClassListing listing{n, c, {}};
    for (const Partition &p : partitions_of(n)) {
        if (is_member(p, c))
            listing.members.push_back(p);
    }
    return listing;
}

} // namespace pedpod
