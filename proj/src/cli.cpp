#include "fanodelta/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "fanodelta/centers.hpp"

namespace fano {

namespace {

using nlohmann::json;

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Match: return "match";
        case CheckStatus::Discrepancy: return "printed-value discrepancy";
        case CheckStatus::Mismatch: return "MISMATCH";
    }
    return "?";
}

std::string row_marker(const Report& r) {
    if (!r.ok()) return "MISMATCH";
    if (r.has_discrepancy()) return "ok (printed-value discrepancy)";
    return "ok";
}

std::string flag_column(const CaseEntry& e) {
    if (e.method == "flag-I") return "I";
    if (e.method == "flag-IIa") return "IIa";
    if (e.method == "flag-IIb") return "IIb";
    if (e.method == "BL") return "BL(" + *field(e.spec, "r") + "," + *field(e.spec, "e") + ")";
    if (e.method == "wBL-custom") return "wBL";
    if (e.method == "alpha-import") return "alpha " + *field(e.spec, "alpha");
    return "isolating";
}

std::string approx(const Rational& r) {
    std::ostringstream s;
    s << std::setprecision(12) << r.to_double();
    return s.str();
}

void print_value(std::ostream& out, const std::string& key, const Rational& v, bool with_approx) {
    out << key << '\t' << v.str();
    if (with_approx) out << '\t' << approx(v);
    out << '\n';
}

void print_verdict(std::ostream& out, const DeltaVerdict& v, bool with_approx) {
    if (v.s) {
        print_value(out, "S_A_Y", v.s->S_A_Y, with_approx);
        print_value(out, "S_V", v.s->S_V, with_approx);
        print_value(out, "F_P", v.s->F_P, with_approx);
        print_value(out, v.s->s_w_upper_bound ? "S_W_upper" : "S_W", v.s->S_W, with_approx);
    }
    for (const auto& t : v.terms) {
        if (t.value)
            print_value(out, "term." + t.label, *t.value, with_approx);
        else
            out << "term." << t.label << "\tinf\n";
    }
    print_value(out, "bound", v.bound, with_approx);
    out << "active\t" << v.active_term().label << '\n';
    out << "exceeds_one\t" << (v.exceeds_one ? "true" : "false") << '\n';
}

json check_json(const Check& c) {
    json j{{"name", c.name}, {"computed", c.computed}, {"printed", c.printed}, {"status", status_name(c.status)}};
    if (c.recomputed) j["recomputed"] = *c.recomputed;
    return j;
}

json report_json(const Report& r) {
    json j{{"family", r.entry.family},     {"point", r.entry.point.type()}, {"case", r.entry.label},
           {"method", r.entry.method},     {"citation", r.entry.citation},  {"status", row_marker(r)},
           {"checks", json::array()}};
    if (r.error.empty()) {
        j["bound"] = r.bound.str();
        j["active"] = r.active_term;
    } else {
        j["error"] = r.error;
    }
    if (r.verdict) j["verdict"] = verdict_to_json(*r.verdict);
    for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
    return j;
}

void print_discrepancies(std::ostream& out, const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        const std::string where =
            std::to_string(r.entry.family) + " " + r.entry.point.type() + " (" + r.entry.label + ")";
        if (!r.error.empty()) out << where << ": error: " << r.error << '\n';
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::Match) continue;
            out << where << ": " << c.name << " printed " << c.printed << ", computed " << c.computed;
            if (c.recomputed) out << ", expected recomputation " << *c.recomputed;
            out << " [" << status_name(c.status) << "]\n";
        }
    }
}

const CaseEntry& find_entry(const Ledger& ledger, int family, const QuotientSingularity& point,
                            const std::string& label) {
    for (const auto& e : ledger.entries)
        if (e.family == family && e.point.same_type(point) && e.label == label) return e;
    throw std::invalid_argument("no ledger entry for family " + std::to_string(family) + ", point " + point.type() +
                                ", case " + label);
}

Family family_from_options(const std::optional<int>& id, const std::string& raw) {
    if (id && !raw.empty()) throw std::invalid_argument("--family and --raw are mutually exclusive");
    if (id) return catalog_family(*id).family;
    if (!raw.empty()) return parse_family_literal(raw);
    throw std::invalid_argument("one of --family or --raw is required");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace

std::string emit_table(const std::vector<Report>& reports) {
    std::vector<std::array<std::string, 7>> rows;
    rows.push_back({"Family", "Point", "Case", "delta_P >=", "flag", "Ref.", "status"});
    for (const auto& r : reports)
        rows.push_back({std::to_string(r.entry.family), r.entry.point.type(), r.entry.label,
                        r.error.empty() ? r.bound.str() : "error", flag_column(r.entry), r.entry.citation,
                        row_marker(r)});
    std::array<std::size_t, 7> width{};
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact delta-invariant bounds for Fano hypersurfaces with maximal singular centers",
                 "fano-delta"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list-families", "List the cataloged families");
    bool list_all = false;
    list->add_flag("--all", list_all, "Add computed baskets and involution types");

    auto* sing = app.add_subcommand("singularities", "Print the basket of a general member");
    std::optional<int> sing_family;
    std::string sing_raw;
    sing->add_option("--family", sing_family, "Catalog family id");
    sing->add_option("--raw", sing_raw, "Family literal \"d;a0,a1,a2,a3,a4\"");

    auto* classify = app.add_subcommand("classify-center", "Classify a center for an explicit member");
    int cls_family = 0;
    std::string cls_poly, cls_point;
    classify->add_option("--family", cls_family, "Catalog family id")->required();
    classify->add_option("--poly", cls_poly, "Polynomial file")->required();
    classify->add_option("--point", cls_point, "Point type, e.g. 1/5(1,2,3)")->required();

    auto* delta = app.add_subcommand("delta", "Recompute a ledger entry");
    int d_family = 0;
    std::string d_point, d_case;
    bool d_json = false, d_approx = false;
    delta->add_option("--family", d_family, "Catalog family id")->required();
    delta->add_option("--point", d_point, "Point type, e.g. 1/5(1,2,3)")->required();
    delta->add_option("--case", d_case, "Case label")->required();
    delta->add_flag("--json", d_json, "JSON output");
    delta->add_flag("--approx", d_approx, "Add a decimal column");

    auto* integ = app.add_subcommand("integrate", "Integrate a Zariski profile given as JSON");
    std::string i_profile;
    bool i_json = false, i_approx = false;
    integ->add_option("--profile", i_profile, "Profile file")->required();
    integ->add_flag("--json", i_json, "JSON output");
    integ->add_flag("--approx", i_approx, "Add a decimal column");

    auto* verify_cmd = app.add_subcommand("verify-all", "Verify every ledger entry");
    std::optional<int> v_family;
    bool v_json = false;
    verify_cmd->add_option("--family", v_family, "Restrict to one family");
    verify_cmd->add_flag("--json", v_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*list) {
            for (const auto& f : catalog_families()) {
                out << f.id << '\t' << family_literal(f.family) << '\t' << anticanonical_cube(f.family).str() << '\t'
                    << f.printed_header;
                if (list_all) {
                    const auto basket = enumerate_singularities(f.family);
                    out << '\t' << basket_string(basket) << '\t';
                    std::string centers;
                    for (const auto& q : basket) {
                        const auto kind = involution_type(f.family, q);
                        if (kind == InvolutionType::None) continue;
                        if (!centers.empty()) centers += "; ";
                        centers += q.type() + " " + to_string(kind);
                    }
                    out << centers;
                }
                out << '\n';
            }
            return 0;
        }
        if (*sing) {
            const Family f = family_from_options(sing_family, sing_raw);
            out << basket_string(enumerate_singularities(f)) << '\n';
            return 0;
        }
        if (*classify) {
            const Family& f = catalog_family(cls_family).family;
            std::ifstream in(cls_poly);
            if (!in) throw std::invalid_argument("cannot open " + cls_poly);
            const WeightedPoly p = load_poly(f, in);
            const QuotientSingularity q = parse_point(cls_point);
            const CenterClass c = classify_point(p, q);
            const auto labels = case_select(f, q, &p);
            out << "point\t" << q.type() << '\n'
                << "involution\t" << to_string(involution_type(f, q)) << '\n'
                << "kind\t" << to_string(c.kind) << '\n'
                << "maximal\t" << to_string(c.maximal) << '\n'
                << "case\t" << (labels.empty() ? std::string("none") : labels.front()) << '\n';
            return 0;
        }
        if (*delta) {
            const Ledger ledger = load_ledger(default_ledger_path());
            const CaseEntry& e = find_entry(ledger, d_family, parse_point(d_point), d_case);
            const Report r = verify(e, ledger.path.parent_path());
            if (!r.error.empty()) throw std::runtime_error(r.error);
            if (d_json) {
                out << report_json(r).dump(2) << '\n';
            } else {
                out << "method\t" << e.method << '\n';
                if (r.verdict) {
                    print_verdict(out, *r.verdict, d_approx);
                } else {
                    print_value(out, "bound", r.bound, d_approx);
                    out << "active\t" << r.active_term << '\n'
                        << "exceeds_one\t" << (r.bound > Rational(1) ? "true" : "false") << '\n';
                }
                out << "status\t" << row_marker(r) << '\n';
                print_discrepancies(out, {r});
            }
            return r.ok() ? 0 : 2;
        }
        if (*integ) {
            const ZariskiProfile p = profile_custom(profile_from_json(read_json_file(i_profile)));
            const DeltaVerdict v = verdict_for_profile(p);
            if (i_json) {
                json j = verdict_to_json(v);
                if (i_approx) j["bound_approx"] = v.bound.to_double();
                out << j.dump(2) << '\n';
            } else {
                print_verdict(out, v, i_approx);
            }
            return 0;
        }
        if (*verify_cmd) {
            const Ledger ledger = load_ledger(default_ledger_path());
            const Summary s = verify_all(ledger, v_family);
            if (v_json) {
                json j{{"entries", json::array()},
                       {"summary",
                        {{"match", s.matches}, {"discrepancy", s.discrepancies}, {"mismatch", s.mismatches}}}};
                for (const auto& r : s.reports) j["entries"].push_back(report_json(r));
                out << j.dump(2) << '\n';
            } else {
                out << emit_table(s.reports);
                out << '\n'
                    << s.reports.size() << " entries: " << s.matches << " match, " << s.discrepancies
                    << " with printed-value discrepancies, " << s.mismatches << " mismatched\n";
                print_discrepancies(out, s.reports);
            }
            return s.ok() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace fano
