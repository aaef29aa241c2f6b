#ifndef PEDPOD_IO_HPP
#define PEDPOD_IO_HPP

#include <cstddef>
#include <string>

#include "json.hpp"

#include "pedpod/enumeration.hpp"
#include "pedpod/verification.hpp"

namespace pedpod {

/* Big integers are written to JSON as decimal strings; partitions as
 * arrays of integers. */

/// One partition per line in the "(a,b,c)" form.
std::string to_lines(const ClassListing &listing);
nlohmann::ordered_json to_json(const ClassListing &listing);

/// Header "n,count", one row per n.
std::string to_csv(const CountTable &table);
nlohmann::ordered_json to_json(const CountTable &table);
std::string render_table(const CountTable &table, std::size_t width = 0);

nlohmann::ordered_json to_json(const AuditReport &report);
/// Lines longer than `width` are cut (0 = no limit).
std::string render_table(const AuditReport &report, std::size_t width = 0);

nlohmann::ordered_json to_json(const Partition &p);

} // namespace pedpod

#endif
