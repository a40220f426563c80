// Command line front end: sequence tables over n, identity checks over
// ranges, single-partition bijection application, matrix rendering, and
// class enumeration. Exit codes: 0 success / all checks pass, 1 an identity
// check failed, 2 usage or precondition error.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <partbij/partbij.hpp>

namespace {

using partbij::ClassPredicate;
using partbij::IdentityCheck;
using partbij::Partition;

struct SequenceColumn {
    std::string name;
    std::function<long long(int)> value;
};

const std::vector<SequenceColumn>& sequence_columns() {
    using partbij::class_part_stats;
    static const std::vector<SequenceColumn> columns = {
        {"a", [](int n) { return partbij::count_one_distinct_even(n); }},
        {"a1", [](int n) { return partbij::count_one_triple(n); }},
        {"f", [](int n) { return partbij::count_one_quintuple(n); }},
        {"total_parts_odd",
         [](int n) { return class_part_stats(n, ClassPredicate::odd_parts()).total_parts; }},
        {"total_parts_distinct",
         [](int n) { return class_part_stats(n, ClassPredicate::distinct_parts()).total_parts; }},
        {"total_distinct_parts_odd",
         [](int n) {
             return class_part_stats(n, ClassPredicate::odd_parts()).total_distinct_parts;
         }},
        {"parts_G",
         [](int n) { return class_part_stats(n, partbij::g_class()).total_parts; }},
        {"distinct_parts_H",
         [](int n) {
             return class_part_stats(n, partbij::h_class()).total_distinct_parts;
         }},
    };
    return columns;
}

std::vector<std::string> column_names() {
    std::vector<std::string> names;
    for (const SequenceColumn& column : sequence_columns()) names.push_back(column.name);
    return names;
}

int run_sequences(int max_n, std::vector<std::string> names, const std::string& format) {
    if (names.empty()) names = column_names();
    std::vector<const SequenceColumn*> selected;
    for (const std::string& name : names) {
        const SequenceColumn* found = nullptr;
        for (const SequenceColumn& column : sequence_columns())
            if (column.name == name) found = &column;
        if (!found) {
            std::cerr << "unknown column: " << name << "\n";
            return 2;
        }
        selected.push_back(found);
    }
    if (format == "csv") {
        std::cout << "n";
        for (const SequenceColumn* column : selected) std::cout << ',' << column->name;
        std::cout << "\n";
        for (int n = 0; n <= max_n; ++n) {
            std::cout << n;
            for (const SequenceColumn* column : selected) std::cout << ',' << column->value(n);
            std::cout << "\n";
        }
    } else {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = 0; n <= max_n; ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            for (const SequenceColumn* column : selected) row[column->name] = column->value(n);
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << "\n";
    }
    return 0;
}

std::string check_detail(const IdentityCheck& check) {
    std::string detail = "lhs=" + std::to_string(check.lhs) + " rhs=" + std::to_string(check.rhs);
    if (check.k) detail = "k=" + std::to_string(*check.k) + " " + detail;
    if (check.p) detail = "p=" + std::to_string(*check.p) + " " + detail;
    if (check.d) detail = "d=" + std::to_string(*check.d) + " " + detail;
    return detail;
}

std::string report_detail(const partbij::BijectionReport& report, const std::string& params) {
    return "bijection " + params + ": domain=" + std::to_string(report.domain_size) +
           " in_target=" + std::to_string(report.image_in_target) +
           " roundtrip_failures=" + std::to_string(report.roundtrip_failures) +
           " collisions=" + std::to_string(report.collisions);
}

ClassPredicate exactly_k_distinct_even(int k) {
    return ClassPredicate::custom([k](const Partition& p) {
        int evens = 0;
        for (const auto& [part, count] : p.multiplicities())
            if (part % 2 == 0) ++evens;
        return evens == k;
    });
}

ClassPredicate exactly_k_repeated(int k) {
    return ClassPredicate::custom([k](const Partition& p) {
        int repeated = 0;
        for (const auto& [part, count] : p.multiplicities())
            if (count >= 2) ++repeated;
        return repeated == k;
    });
}

ClassPredicate exactly_k_high_valuation(int k, int min_valuation) {
    return ClassPredicate::custom([k, min_valuation](const Partition& p) {
        int high = 0;
        for (const auto& [part, count] : p.multiplicities())
            if (partbij::dyadic_valuation(part) >= min_valuation) ++high;
        return high == k;
    });
}

ClassPredicate exactly_k_high_multiplicity(int k, int min_valuation) {
    const long long threshold = 1LL << min_valuation;
    return ClassPredicate::custom([k, threshold](const Partition& p) {
        int high = 0;
        for (const auto& [part, count] : p.multiplicities())
            if (count >= threshold) ++high;
        return high == k;
    });
}

ClassPredicate no_multiple_of(int d) {
    return ClassPredicate::custom([d](const Partition& p) {
        for (const auto& [part, count] : p.multiplicities())
            if (part % d == 0) return false;
        return true;
    });
}

ClassPredicate mult_below(int d) {
    return ClassPredicate::custom([d](const Partition& p) {
        for (const auto& [part, count] : p.multiplicities())
            if (count >= d) return false;
        return true;
    });
}

// k values worth checking: both class counts are zero once the lightest
// possible member already outweighs n.
std::vector<int> default_k_values(int n, long long unit) {
    std::vector<int> ks;
    for (int k = 0; static_cast<long long>(k) * (k + 1) * unit <= 2 * static_cast<long long>(n);
         ++k)
        ks.push_back(k);
    return ks;
}

int default_max_n(int theorem) {
    switch (theorem) {
        case 3:
        case 5: return 35;
        case 4: return 40;
        default: return 45;
    }
}

int run_check(int theorem, std::optional<int> max_n_option, std::vector<int> ks,
              std::vector<int> ps, std::vector<int> ds) {
    for (int p : ps)
        if (p < 2) {
            std::cerr << "valuation threshold p must be >= 2\n";
            return 2;
        }
    for (int d : ds)
        if (d < 2) {
            std::cerr << "glaisher base d must be >= 2\n";
            return 2;
        }
    for (int k : ks)
        if (k < 0) {
            std::cerr << "class index k must be >= 0\n";
            return 2;
        }
    if (theorem == 5 && ps.empty()) ps = {2, 3};
    if (theorem == 4 && ds.empty()) ds = {2, 3, 5};
    const int max_n = max_n_option.value_or(default_max_n(theorem));

    bool all_pass = true;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> failures;
        auto note = [&](const IdentityCheck& check) {
            if (!check.passed()) failures.push_back(check_detail(check));
        };
        auto note_report = [&](const partbij::BijectionReport& report,
                               const std::string& params) {
            if (!report.passed()) failures.push_back(report_detail(report, params));
        };
        switch (theorem) {
            case 1: note(partbij::check_one_even(n)); break;
            case 2: note(partbij::check_one_triple(n)); break;
            case 6: note(partbij::check_one_quintuple(n)); break;
            case 3: {
                std::vector<int> kset = ks.empty() ? default_k_values(n, 2) : ks;
                for (int k : kset) {
                    note(partbij::check_k_repeated(n, k));
                    auto report = partbij::verify_bijection(
                        n, [](const Partition& p) { return partbij::evens_to_repeats(p); },
                        [](const Partition& p) { return partbij::repeats_to_evens(p); },
                        exactly_k_distinct_even(k), exactly_k_repeated(k));
                    note_report(report, "k=" + std::to_string(k));
                }
                break;
            }
            case 4: {
                for (int d : ds) {
                    note(partbij::check_glaisher(n, d));
                    auto report = partbij::verify_bijection(
                        n,
                        [d](const Partition& p) { return partbij::glaisher_forward(p, d); },
                        [d](const Partition& p) { return partbij::glaisher_inverse(p, d); },
                        no_multiple_of(d), mult_below(d));
                    note_report(report, "d=" + std::to_string(d));
                }
                break;
            }
            case 5: {
                for (int p : ps) {
                    std::vector<int> kset =
                        ks.empty() ? default_k_values(n, 1LL << (p - 1)) : ks;
                    for (int k : kset) {
                        note(partbij::check_k_multiplicity(n, k, p));
                        auto report = partbij::verify_bijection(
                            n,
                            [p](const Partition& q) {
                                return partbij::valuation_to_multiplicity(q, p);
                            },
                            [p](const Partition& q) {
                                return partbij::multiplicity_to_valuation(q, p);
                            },
                            exactly_k_high_valuation(k, p), exactly_k_high_multiplicity(k, p));
                        note_report(report,
                                    "p=" + std::to_string(p) + " k=" + std::to_string(k));
                    }
                }
                break;
            }
            default: {
                std::cerr << "unknown theorem: " << theorem << "\n";
                return 2;
            }
        }
        if (failures.empty()) {
            std::cout << "n=" << n << " pass\n";
        } else {
            all_pass = false;
            std::cout << "n=" << n << " FAIL";
            for (const std::string& failure : failures) std::cout << " (" << failure << ")";
            std::cout << "\n";
        }
    }
    std::cout << (all_pass ? "RESULT pass" : "RESULT fail") << "\n";
    return all_pass ? 0 : 1;
}

int run_map(const std::string& bijection, const std::string& text, bool inverse, int p, int d) {
    std::optional<Partition> parsed = Partition::parse(text);
    if (!parsed) {
        std::cerr << "invalid partition literal: \"" << text << "\"\n";
        return 2;
    }
    try {
        Partition image;
        if (bijection == "glaisher")
            image = inverse ? partbij::glaisher_inverse(*parsed, d)
                            : partbij::glaisher_forward(*parsed, d);
        else if (bijection == "thm3")
            image = inverse ? partbij::repeats_to_evens(*parsed)
                            : partbij::evens_to_repeats(*parsed);
        else
            image = inverse ? partbij::multiplicity_to_valuation(*parsed, p)
                            : partbij::valuation_to_multiplicity(*parsed, p);
        std::cout << image.to_string() << "\n";
        return 0;
    } catch (const std::exception& error) {
        std::cerr << error.what() << "\n";
        return 2;
    }
}

int run_matrix(const std::string& text) {
    std::optional<Partition> parsed = Partition::parse(text);
    if (!parsed) {
        std::cerr << "invalid partition literal: \"" << text << "\"\n";
        return 2;
    }
    std::cout << partbij::render(partbij::encode(*parsed));
    return 0;
}

int run_enumerate(int n, const std::string& klass) {
    ClassPredicate pred;
    if (klass == "all")
        pred = ClassPredicate::all();
    else if (klass == "odd")
        pred = ClassPredicate::odd_parts();
    else if (klass == "distinct")
        pred = ClassPredicate::distinct_parts();
    else if (klass == "G")
        pred = partbij::g_class();
    else if (klass == "H")
        pred = partbij::h_class();
    else if (klass == "one-even")
        pred = ClassPredicate::custom(partbij::has_one_distinct_even);
    else if (klass == "one-triple")
        pred = ClassPredicate::custom(partbij::is_one_triple);
    else if (klass == "one-quintuple")
        pred = ClassPredicate::custom(partbij::is_one_quintuple);
    else {
        std::cerr << "unknown class: " << klass << "\n";
        return 2;
    }
    long long count = 0;
    for (const Partition& p : partbij::PartitionRange(n, pred)) {
        std::cout << p.to_string() << "\n";
        ++count;
    }
    std::cout << "count " << count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer partition bijections, bit-matrix encodings, and identity checks"};
    app.require_subcommand(1);
    int result = 0;

    // sequences
    int seq_max_n = 0;
    std::vector<std::string> seq_columns;
    std::string seq_format = "csv";
    CLI::App* sequences = app.add_subcommand("sequences", "emit per-n counter tables");
    sequences->add_option("--max-n", seq_max_n, "largest n (table runs 0..N)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sequences->add_option("--columns", seq_columns, "columns to emit (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(column_names()));
    sequences->add_option("--format", seq_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sequences->callback([&] { result = run_sequences(seq_max_n, seq_columns, seq_format); });

    // check
    int chk_theorem = 0;
    std::optional<int> chk_max_n;
    std::vector<int> chk_k, chk_p, chk_d;
    CLI::App* check = app.add_subcommand("check", "run an identity check over 1..max-n");
    check->add_option("--theorem", chk_theorem, "identity to check (1..6)")
        ->required()
        ->check(CLI::Range(1, 6));
    check->add_option("--max-n", chk_max_n, "largest n (default depends on the identity)")
        ->check(CLI::NonNegativeNumber);
    check->add_option("--k", chk_k, "restrict to these class indices (3 and 5 only)");
    check->add_option("--p", chk_p, "valuation thresholds for identity 5 (default 2 3)");
    check->add_option("--d", chk_d, "bases for identity 4 (default 2 3 5)");
    check->callback([&] { result = run_check(chk_theorem, chk_max_n, chk_k, chk_p, chk_d); });

    // map
    std::string map_bijection, map_partition;
    bool map_inverse = false;
    int map_p = 2, map_d = 2;
    CLI::App* map = app.add_subcommand("map", "apply a bijection to one partition");
    map->add_option("--bijection", map_bijection, "glaisher, thm3 or thm5")
        ->required()
        ->check(CLI::IsMember({"glaisher", "thm3", "thm5"}));
    map->add_option("--partition", map_partition, "partition literal, e.g. \"4,2,1,1\"")
        ->required();
    map->add_flag("--inverse", map_inverse, "apply the inverse direction");
    map->add_option("--p", map_p, "valuation threshold for thm5 (default 2)");
    map->add_option("--d", map_d, "base for glaisher (default 2)");
    map->callback(
        [&] { result = run_map(map_bijection, map_partition, map_inverse, map_p, map_d); });

    // matrix
    std::string matrix_partition;
    CLI::App* matrix = app.add_subcommand("matrix", "render the bit matrices of a partition");
    matrix->add_option("--partition", matrix_partition, "partition literal")->required();
    matrix->callback([&] { result = run_matrix(matrix_partition); });

    // enumerate
    int enum_n = 0;
    std::string enum_class = "all";
    CLI::App* enumerate = app.add_subcommand("enumerate", "list the members of a class");
    enumerate->add_option("--n", enum_n, "weight to enumerate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--class", enum_class,
                          "all, odd, distinct, G, H, one-even, one-triple, one-quintuple");
    enumerate->callback([&] { result = run_enumerate(enum_n, enum_class); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& error) {
        std::cerr << error.what() << "\n";
        return 2;
    }
    return result;
}
