#include "pedpod/io.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace pedpod {

namespace {

std::string clip(const std::string &text, std::size_t width)
{
    if (width == 0)
        return text;
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.size() > width)
            line = width > 3 ? line.substr(0, width - 3) + "..." : line.substr(0, width);
        out += line;
        out += '\n';
    }
    return out;
}

const char *verdict(bool pass, bool informational)
{
    if (informational)
        return pass ? "info" : "info-fail";
    return pass ? "ok" : "FAIL";
}

} // namespace

nlohmann::ordered_json to_json(const Partition &p)
{
    auto arr = nlohmann::ordered_json::array();
    for (Part x : p.parts())
        arr.push_back(x);
    return arr;
}

std::string to_lines(const ClassListing &listing)
{
    std::string out;
    for (const Partition &p : listing.members) {
        out += p.to_string();
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const ClassListing &listing)
{
    nlohmann::ordered_json j;
    j["n"] = listing.n;
    j["class"] = class_name(listing.cls);
    j["count"] = listing.members.size();
    auto members = nlohmann::ordered_json::array();
    for (const Partition &p : listing.members)
        members.push_back(to_json(p));
    j["members"] = std::move(members);
    return j;
}

std::string to_csv(const CountTable &table)
{
    std::string out = "n,count\n";
    for (std::size_t n = 0; n < table.counts.size(); ++n)
        out += std::to_string(n) + "," + table.counts[n].get_str() + "\n";
    return out;
}

nlohmann::ordered_json to_json(const CountTable &table)
{
    nlohmann::ordered_json j;
    j["class"] = class_name(table.cls);
    j["backend"] = backend_name(table.backend);
    j["n_max"] = table.n_max;
    auto counts = nlohmann::ordered_json::array();
    for (const BigInt &c : table.counts)
        counts.push_back(c.get_str());
    j["counts"] = std::move(counts);
    return j;
}

std::string render_table(const CountTable &table, std::size_t width)
{
    std::ostringstream os;
    os << "class " << class_name(table.cls) << ", backend " << backend_name(table.backend) << "\n";
    os << std::setw(5) << "n" << "  count\n";
    for (std::size_t n = 0; n < table.counts.size(); ++n)
        os << std::setw(5) << n << "  " << table.counts[n].get_str() << "\n";
    return clip(os.str(), width);
}

nlohmann::ordered_json to_json(const AuditReport &report)
{
    using json = nlohmann::ordered_json;
    json j;
    j["subject"] = report.subject;
    j["n_range"] = json::array({report.n_lo, report.n_hi});
    j["backend"] = report.backend ? json(backend_name(*report.backend)) : json(nullptr);
    j["reconstructed"] = report.reconstructed;
    j["overall_pass"] = report.pass;

    json records = json::array();
    for (const auto &r : report.identity_rows) {
        records.push_back({
            {"n", r.n},
            {"lhs", json::array({r.lhs_first.get_str(), r.lhs_second.get_str()})},
            {"rhs", r.rhs.get_str()},
            {"pass", r.pass},
            {"informational", r.informational},
        });
    }
    for (const auto &r : report.bijection_rows) {
        records.push_back({
            {"n", r.n},
            {"domain_size", r.domain_size},
            {"codomain_size", r.codomain_size},
            {"total", r.total},
            {"into", r.into},
            {"injective", r.injective},
            {"surjective", r.surjective},
            {"round_trip", r.round_trip},
            {"weight_ok", r.weight_ok},
            {"pass", r.pass()},
            {"informational", r.informational},
        });
    }
    for (const auto &r : report.comparison_rows) {
        records.push_back({
            {"check", r.check},
            {"class", class_name(r.cls)},
            {"n", r.n},
            {"left", r.left.get_str()},
            {"right", r.right.get_str()},
            {"pass", r.pass},
        });
    }
    for (const auto &r : report.structure_rows) {
        records.push_back({
            {"n", r.n},
            {"sizes", {{"A", r.a}, {"B", r.b}, {"C", r.c}, {"D", r.d},
                       {"A'", r.a_prime}, {"B'", r.b_prime}, {"C'", r.c_prime}, {"D'", r.d_prime}}},
            {"disjoint", r.disjoint},
            {"cardinality", r.cardinality},
            {"ca_bijective", r.ca_bijective},
            {"db_bijective", r.db_bijective},
            {"exceptional_bijective", r.exceptional_bijective},
            {"pass", r.pass()},
        });
    }
    j["records"] = std::move(records);

    json failures = json::array();
    for (const auto &c : report.counterexamples)
        failures.push_back({{"n", c.n}, {"property", c.property}, {"detail", c.detail}});
    j["counterexamples"] = std::move(failures);
    j["counterexamples_dropped"] = report.counterexamples_dropped;
    return j;
}

std::string render_table(const AuditReport &report, std::size_t width)
{
    std::ostringstream os;
    os << report.subject << "  n=" << report.n_lo << ".." << report.n_hi;
    if (report.backend)
        os << "  backend=" << backend_name(*report.backend);
    if (report.reconstructed)
        os << "  [reconstructed]";
    os << "\n";

    if (!report.identity_rows.empty()) {
        os << std::setw(5) << "n" << std::setw(24) << "lhs1" << std::setw(24) << "lhs2" << std::setw(24) << "rhs"
           << "  status\n";
        for (const auto &r : report.identity_rows) {
            os << std::setw(5) << r.n << std::setw(24) << r.lhs_first.get_str() << std::setw(24)
               << r.lhs_second.get_str() << std::setw(24) << r.rhs.get_str() << "  "
               << verdict(r.pass, r.informational) << "\n";
        }
    }
    if (!report.bijection_rows.empty()) {
        os << std::setw(5) << "n" << std::setw(8) << "|dom|" << std::setw(8) << "|cod|"
           << "  total into inj surj trip weight  status\n";
        for (const auto &r : report.bijection_rows) {
            auto flag = [](bool b) { return b ? "y" : "N"; };
            os << std::setw(5) << r.n << std::setw(8) << r.domain_size << std::setw(8) << r.codomain_size
               << std::setw(7) << flag(r.total) << std::setw(5) << flag(r.into) << std::setw(4)
               << flag(r.injective) << std::setw(5) << flag(r.surjective) << std::setw(5)
               << flag(r.round_trip) << std::setw(7) << flag(r.weight_ok) << "  "
               << verdict(r.pass(), r.informational) << "\n";
        }
    }
    if (!report.comparison_rows.empty()) {
        // one summary line per (check, class)
        std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> summary;
        std::vector<std::pair<std::string, std::string>> order;
        for (const auto &r : report.comparison_rows) {
            auto key = std::make_pair(r.check, std::string(class_name(r.cls)));
            auto [it, fresh] = summary.try_emplace(key, 0, 0);
            if (fresh)
                order.push_back(key);
            ++it->second.first;
            it->second.second += r.pass ? 0 : 1;
        }
        os << std::left << std::setw(18) << "check" << std::setw(14) << "class" << std::right << std::setw(8)
           << "rows" << std::setw(10) << "failures" << "\n";
        for (const auto &key : order) {
            const auto &[rows, bad] = summary.at(key);
            os << std::left << std::setw(18) << key.first << std::setw(14) << key.second << std::right
               << std::setw(8) << rows << std::setw(10) << bad << "\n";
        }
    }
    if (!report.structure_rows.empty()) {
        os << std::setw(5) << "n" << std::setw(6) << "|A|" << std::setw(6) << "|B|" << std::setw(6) << "|C|"
           << std::setw(6) << "|D|" << std::setw(6) << "|A'|" << std::setw(6) << "|B'|" << std::setw(6) << "|C'|"
           << std::setw(6) << "|D'|" << "  status\n";
        for (const auto &r : report.structure_rows) {
            os << std::setw(5) << r.n << std::setw(6) << r.a << std::setw(6) << r.b << std::setw(6) << r.c
               << std::setw(6) << r.d << std::setw(6) << r.a_prime << std::setw(6) << r.b_prime << std::setw(6)
               << r.c_prime << std::setw(6) << r.d_prime << "  " << verdict(r.pass(), false) << "\n";
        }
    }
    for (const auto &c : report.counterexamples)
        os << "  counterexample n=" << c.n << " [" << c.property << "] " << c.detail << "\n";
    if (report.counterexamples_dropped)
        os << "  ... " << report.counterexamples_dropped << " more counterexamples dropped\n";
    os << "overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return clip(os.str(), width);
}

} // namespace pedpod
