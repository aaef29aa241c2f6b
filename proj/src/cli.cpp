#include "pedpod/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pedpod/io.hpp"

namespace pedpod::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string &name)
{
    if (name == "table")
        return Format::Table;
    if (name == "csv")
        return Format::Csv;
    if (name == "json")
        return Format::Json;
    throw UsageError("unknown format \"" + name + "\" (expected table, csv or json)");
}

std::size_t width_hint()
{
    const char *w = std::getenv("PEDPOD_WIDTH");
    if (!w)
        return 0;
    try {
        return static_cast<std::size_t>(std::stoul(w));
    } catch (const std::exception &) {
        return 0;
    }
}

void require_non_negative(Part n, const char *flag)
{
    if (n < 0)
        throw UsageError(std::string(flag) + " must be non-negative");
}

void emit_reports(std::vector<AuditReport> &reports, Format format, std::ostream &out)
{
    if (format == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto &r : reports)
            arr.push_back(to_json(r));
        out << (reports.size() == 1 ? arr.front() : arr).dump(2) << "\n";
        return;
    }
    if (format == Format::Csv)
        throw UsageError("csv output is only available for count");
    for (const auto &r : reports)
        out << render_table(r, width_hint());
}

int verdict(const std::vector<AuditReport> &reports)
{
    for (const auto &r : reports) {
        if (!r.pass)
            return exit_verification_failed;
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Restricted partition classes with distinct even or odd parts: counts, listings, bijections "
                 "and exhaustive verification."};
    app.require_subcommand(1);

    std::string class_sel, bijection_sel, identity_sel, backend_sel = "dp", format_sel = "table";
    std::string partition_text, tag_sel = "same";
    Part n = -1, from = 0, to = -1;
    bool inverse = false, structure = false;

    auto *count = app.add_subcommand("count", "count table for one class");
    count->add_option("--class", class_sel, "class name (ped, ped_gt1, d1..d3, pod, pod_gt2, o1..o3, four_regular, all)")
        ->required();
    count->add_option("--to", to, "largest n")->required();
    count->add_option("--backend", backend_sel, "enum, dp or series");
    count->add_option("--format", format_sel, "table, csv or json");

    auto *list = app.add_subcommand("list", "members of a class at one n");
    list->add_option("--class", class_sel, "class name")->required();
    list->add_option("--n", n, "weight")->required();
    list->add_option("--format", format_sel, "table or json");

    auto *apply = app.add_subcommand("apply", "apply a bijection (or its inverse) to one partition");
    apply->add_option("--bijection", bijection_sel, "bijection name, e.g. thm2.exchange.CA")->required();
    apply->add_option("--partition", partition_text, "partition such as \"(3,3,2)\"")->required();
    apply->add_flag("--inverse", inverse, "apply the inverse map");
    apply->add_option("--tag", tag_sel, "for inverses of thm2.total/thm5.total: same or minus3");
    apply->add_option("--format", format_sel, "table or json");

    auto *audit = app.add_subcommand("audit", "exhaustive bijection audit");
    audit->add_option("--bijection", bijection_sel, "bijection name or \"all\"");
    audit->add_flag("--structure", structure, "check the exchange-set structure of thm2 instead");
    audit->add_option("--from", from, "smallest n (default 0)");
    audit->add_option("--to", to, "largest n")->required();
    audit->add_option("--format", format_sel, "table or json");

    auto *verify = app.add_subcommand("verify", "check identities T1..T6 numerically");
    verify->add_option("--identity", identity_sel, "T1..T6 or \"all\"")->required();
    verify->add_option("--from", from, "smallest n (default 0)");
    verify->add_option("--to", to, "largest n")->required();
    verify->add_option("--backend", backend_sel, "enum, dp or series");
    verify->add_option("--format", format_sel, "table or json");

    auto *crosscheck = app.add_subcommand("crosscheck", "compare the counting backends");
    crosscheck->add_option("--to", to, "largest n")->required();
    crosscheck->add_option("--format", format_sel, "table or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const Format format = parse_format(format_sel);

        if (count->parsed()) {
            require_non_negative(to, "--to");
            const CountTable table = count_table(parse_class(class_sel), to, parse_backend(backend_sel));
            if (format == Format::Csv)
                out << to_csv(table);
            else if (format == Format::Json)
                out << to_json(table).dump(2) << "\n";
            else
                out << render_table(table, width_hint());
            return exit_ok;
        }

        if (list->parsed()) {
            require_non_negative(n, "--n");
            if (n > enum_backend_limit)
                throw UsageError("--n is limited to " + std::to_string(enum_backend_limit) + " for listings");
            const ClassListing listing = class_members(n, parse_class(class_sel));
            if (format == Format::Json)
                out << to_json(listing).dump(2) << "\n";
            else if (format == Format::Table)
                out << to_lines(listing);
            else
                throw UsageError("csv output is only available for count");
            return exit_ok;
        }

        if (apply->parsed()) {
            const BijectionId id = parse_bijection(bijection_sel);
            const Partition input = Partition::parse(partition_text);
            const BijectionInfo &info = bijection_info(id);
            const ClassId tag_class = id == BijectionId::B5Total ? ClassId::O2 : ClassId::D2;

            nlohmann::ordered_json j;
            j["bijection"] = info.name;
            j["direction"] = inverse ? "inverse" : "forward";
            j["reconstructed"] = info.reconstructed;
            std::string text;
            if (!inverse) {
                const Part ref = reference_n_for_domain(id, input);
                const TaggedPreimage result = apply_forward(id, input, ref);
                j["n"] = ref;
                j["input"] = to_json(input);
                if (info.tagged)
                    j["source_tag"] = source_tag_name(result.source, tag_class);
                j["output"] = to_json(result.partition);
                text = info.tagged ? std::string(source_tag_name(result.source, tag_class)) + " " +
                                         result.partition.to_string()
                                   : result.partition.to_string();
            } else {
                SourceTag tag;
                if (tag_sel == "same")
                    tag = SourceTag::Same;
                else if (tag_sel == "minus3")
                    tag = SourceTag::Minus3;
                else
                    throw UsageError("--tag must be same or minus3");
                const TaggedPreimage t{tag, input};
                const Part ref = reference_n_for_codomain(id, t);
                const Partition result = apply_inverse(id, t, ref);
                j["n"] = ref;
                j["input"] = to_json(input);
                if (info.tagged)
                    j["source_tag"] = source_tag_name(tag, tag_class);
                j["output"] = to_json(result);
                text = result.to_string();
            }
            if (format == Format::Json)
                out << j.dump(2) << "\n";
            else
                out << text << "\n";
            return exit_ok;
        }

        if (audit->parsed()) {
            require_non_negative(from, "--from");
            if (to < from)
                throw UsageError("--to must be at least --from");
            if (to > enum_backend_limit)
                throw UsageError("audits are limited to n <= " + std::to_string(enum_backend_limit));
            std::vector<AuditReport> reports;
            if (structure) {
                reports.push_back(thm2_structure_check(from, to));
            } else if (bijection_sel.empty()) {
                throw UsageError("audit needs --bijection or --structure");
            } else if (bijection_sel == "all") {
                for (BijectionId id : all_bijection_ids)
                    reports.push_back(audit_bijection(id, from, to));
            } else {
                reports.push_back(audit_bijection(parse_bijection(bijection_sel), from, to));
            }
            emit_reports(reports, format, out);
            return verdict(reports);
        }

        if (verify->parsed()) {
            require_non_negative(from, "--from");
            if (to < from)
                throw UsageError("--to must be at least --from");
            const Backend backend = parse_backend(backend_sel);
            std::vector<AuditReport> reports;
            if (identity_sel == "all" || identity_sel == "ALL") {
                for (IdentityId id : all_identity_ids)
                    reports.push_back(verify_identity(id, from, to, backend));
            } else {
                reports.push_back(verify_identity(parse_identity(identity_sel), from, to, backend));
            }
            emit_reports(reports, format, out);
            return verdict(reports);
        }

        if (crosscheck->parsed()) {
            require_non_negative(to, "--to");
            std::vector<AuditReport> reports{cross_check_counts(to)};
            emit_reports(reports, format, out);
            return verdict(reports);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const BackendUnavailable &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace pedpod::cli
