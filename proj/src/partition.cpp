#include "pedpod/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace pedpod {

Partition Partition::from_parts(std::span<const Part> raw)
{
    Partition p;
    p.parts_.assign(raw.begin(), raw.end());
    for (Part x : p.parts_) {
        if (x <= 0)
            throw DomainError("partition parts must be positive, got " + std::to_string(x));
    }
    std::sort(p.parts_.begin(), p.parts_.end(), std::greater<>());
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), Part{0});
    return p;
}

Partition make_partition(std::span<const Part> raw)
{
    return Partition::from_parts(raw);
}

Partition Partition::parse(std::string_view text)
{
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact.push_back(c);
    }
    if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
        throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");

    std::vector<Part> raw;
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        auto token = body.substr(0, comma);
        Part value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
        raw.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
        if (body.empty())
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
    }
    if (!std::is_sorted(raw.begin(), raw.end(), std::greater<>()))
        throw std::invalid_argument("partition parts must be non-increasing: \"" + std::string(text) + "\"");
    return from_parts(raw);
}

Part Partition::largest() const
{
    if (parts_.empty())
        throw DomainError("the empty partition has no largest part");
    return parts_.front();
}

std::size_t Partition::multiplicity(Part value) const
{
    auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value, std::greater<>());
    return static_cast<std::size_t>(hi - lo);
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

namespace {

constexpr std::array<std::string_view, 12> class_names = {
    "ped", "ped_gt1", "d1", "d2", "d3", "pod", "pod_gt2", "o1", "o2", "o3", "four_regular", "all",
};

/* true iff no part of the given parity (0 = even, 1 = odd) is repeated;
 * parts are sorted so repeats are adjacent. */
bool parity_parts_distinct(std::span<const Part> parts, Part parity)
{
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1] && parts[i] % 2 == parity)
            return false;
    }
    return true;
}

} // namespace

std::string_view class_name(ClassId c)
{
    return class_names[static_cast<std::size_t>(c)];
}

ClassId parse_class(std::string_view name)
{
    std::string lower;
    for (char c : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (std::size_t i = 0; i < class_names.size(); ++i) {
        if (class_names[i] == lower)
            return static_cast<ClassId>(i);
    }
    throw std::invalid_argument("unknown partition class \"" + std::string(name) + "\"");
}

bool is_member(const Partition &p, ClassId c)
{
    const auto parts = p.parts();
    const bool ped = parity_parts_distinct(parts, 0);
    const bool pod = parity_parts_distinct(parts, 1);

    switch (c) {
    case ClassId::All:
        return true;
    case ClassId::FourRegular:
        return std::none_of(parts.begin(), parts.end(), [](Part x) { return x % 4 == 0; });
    case ClassId::Ped:
        return ped;
    case ClassId::Pod:
        return pod;
    case ClassId::PedGt1:
        return ped && !p.empty() && parts.back() > 1;
    case ClassId::PodGt2:
        return pod && !p.empty() && parts.back() > 2;
    default:
        break;
    }

    // the remaining classes all talk about the largest part
    if (p.empty())
        return false;
    const Part top = parts.front();
    const std::size_t mult = p.multiplicity(top);
    switch (c) {
    case ClassId::D1:
        return ped && top % 2 == 1;
    case ClassId::D2:
        return ped && top % 2 == 1 && mult >= 2;
    case ClassId::D3:
        return ped && top % 2 == 1 && mult == 1;
    case ClassId::O1:
        return pod && top % 2 == 0;
    case ClassId::O2:
        return pod && top % 2 == 0 && mult >= 2;
    case ClassId::O3:
        return pod && top % 2 == 0 && mult == 1;
    default:
        break;
    }
    return false;
}

ShapeDescriptor shape(const Partition &p)
{
    if (p.empty())
        throw DomainError("shape() of the empty partition");
    ShapeDescriptor s;
    const auto parts = p.parts();
    s.largest = parts.front();
    s.largest_multiplicity = p.multiplicity(s.largest);
    std::size_t next = s.largest_multiplicity;
    if (next < parts.size()) {
        s.second = parts[next];
        ++next;
    }
    s.tail = Partition::from_parts(parts.subspan(next));
    return s;
}

Partition recompose(const ShapeDescriptor &s)
{
    std::vector<Part> raw(s.largest_multiplicity, s.largest);
    if (s.second)
        raw.push_back(*s.second);
    raw.insert(raw.end(), s.tail.parts().begin(), s.tail.parts().end());
    return Partition::from_parts(raw);
}

} // namespace pedpod
