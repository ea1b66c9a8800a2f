#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qsbt/qsbt.hpp>
#include <qsbt/verify/suites.hpp>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_config_error = 2;

struct Options {
    qsbt::verify::RunConfig config;
    std::string format = "table";
    std::string out;
    std::vector<double> tol_values;

    std::string in;
    std::string direction = "forward";

    std::string which;
    std::size_t n_max = 8;
    double q_max = 1.5;
    std::size_t q_steps = 6;

    std::string kernel;
    std::string p_text;
    std::string q_text;
    double x = 0.0;
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw qsbt::config_error("cannot open output file '" + path + "'");
    }
    f << text;
    if (!f) {
        throw qsbt::config_error("write failed for '" + path + "'");
    }
}

qsbt::Quaternion parse_quaternion(const std::string& text, const char* flag) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw qsbt::config_error(std::string(flag) + ": expected w,x,y,z but got '" + text + "'");
        }
    }
    if (parts.size() != 4) {
        throw qsbt::config_error(std::string(flag) + ": expected four comma-separated numbers");
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

std::string render_table(const qsbt::Table& t, const std::string& format) {
    using qsbt::verify::detail::exact;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["key"] = t.key_name;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : t.rows) {
            nlohmann::ordered_json row;
            row[t.key_name] = r.key;
            row["closed_form"] = r.closed_form;
            for (std::size_t k = 0; k < t.quadrature_names.size(); ++k) {
                row[t.quadrature_names[k]] = r.quadrature[k];
            }
            row["max_rel_diff"] = r.max_rel_diff();
            j["rows"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    const bool csv = format == "csv";
    std::ostringstream out;
    auto cell = [&](const std::string& s, bool last) {
        if (csv) {
            out << s << (last ? "\n" : ",");
        } else {
            out << s << std::string(s.size() < 24 ? 24 - s.size() : 1, ' ');
            if (last) {
                out << '\n';
            }
        }
    };
    cell(t.key_name, false);
    cell("closed_form", false);
    for (const auto& name : t.quadrature_names) {
        cell(name, false);
    }
    cell("max_rel_diff", true);
    for (const auto& r : t.rows) {
        cell(exact(r.key), false);
        cell(exact(r.closed_form), false);
        for (const double v : r.quadrature) {
            cell(exact(v), false);
        }
        cell(qsbt::verify::detail::sci(r.max_rel_diff()), true);
    }
    return out.str();
}

int run_verify(const Options& o) {
    const auto report = qsbt::verify::run_verification(o.config);
    std::string text;
    if (o.format == "json") {
        text = qsbt::verify::to_json(report);
    } else if (o.format == "csv") {
        text = qsbt::verify::to_csv(report);
    } else {
        text = qsbt::verify::to_table(report);
    }
    emit(text, o.out);
    return report.all_passed() ? exit_pass : exit_check_failure;
}

int run_transform(const Options& o) {
    std::ifstream in(o.in, std::ios::binary);
    if (!in) {
        throw qsbt::config_error("cannot open input file '" + o.in + "'");
    }
    const qsbt::CoefficientFile file = qsbt::read_coefficients(in);
    const double nu = o.config.nu;
    if (file.nu) {
        qsbt::require_same_weight(*file.nu, nu, "transform");
    }
    std::vector<qsbt::Quaternion> result;
    if (o.direction == "forward") {
        result = qsbt::bargmann_coeff(qsbt::HermiteExpansion(nu, file.coeffs)).coeffs();
    } else {
        result = qsbt::inverse_coeff(qsbt::FockElement(qsbt::PowerSeries(file.coeffs), nu)).coeffs();
    }
    std::ostringstream out;
    qsbt::write_coefficients(out, result, nu);
    emit(out.str(), o.out);
    return exit_pass;
}

int run_table(const Options& o) {
    const auto& c = o.config;
    qsbt::Table t;
    if (o.which == "monomial-norms") {
        t = qsbt::monomial_norm_table(o.n_max, c.nu, c.radial_nodes, c.angular_count);
    } else if (o.which == "hermite-norms") {
        t = qsbt::hermite_norm_table(o.n_max, c.nu, c.gh_nodes);
    } else {
        t = qsbt::kernel_norm_table(o.q_max, o.q_steps, c.nu, c.gh_nodes, c.radial_nodes, c.angular_count);
    }
    emit(render_table(t, o.format), o.out);
    return exit_pass;
}

int run_kernel(const Options& o) {
    const double nu = o.config.nu;
    const qsbt::Quaternion q = parse_quaternion(o.q_text, "--q");
    qsbt::Quaternion value;
    if (o.kernel == "A") {
        value = qsbt::kernel_A(q, o.x, nu);
    } else {
        if (o.p_text.empty()) {
            throw qsbt::config_error("kernel K needs --p");
        }
        value = qsbt::reproducing_kernel(parse_quaternion(o.p_text, "--p"), q, nu);
    }
    using qsbt::verify::detail::exact;
    std::string text;
    if (o.format == "json") {
        nlohmann::ordered_json j{{"w", value.w}, {"x", value.x}, {"y", value.y}, {"z", value.z}};
        text = j.dump() + "\n";
    } else if (o.format == "csv") {
        text = "w,x,y,z\n" + exact(value.w) + "," + exact(value.x) + "," + exact(value.y) + "," + exact(value.z) + "\n";
    } else {
        text = exact(value.w) + " " + exact(value.x) + " " + exact(value.y) + " " + exact(value.z) + "\n";
    }
    emit(text, o.out);
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternionic Segal-Bargmann transform: identity checks, tables and coefficient transforms"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    auto& c = o.config;
    app.add_option("--nu", c.nu, "Gaussian weight nu > 0")->capture_default_str();
    app.add_option("--trunc", c.trunc, "truncation degree N used by the suites")->capture_default_str();
    app.add_option("--gh-nodes", c.gh_nodes, "Gauss-Hermite order")->capture_default_str();
    app.add_option("--radial-nodes", c.radial_nodes, "radial Gauss-Legendre nodes of the slice rule")
        ->capture_default_str();
    app.add_option("--angular", c.angular_count, "equispaced angles of the slice rule")->capture_default_str();
    app.add_option("--seed", c.seed, "seed for all random samples")->capture_default_str();
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", o.out, "output file (default: standard output)");

    auto* verify = app.add_subcommand("verify", "run every identity and property suite");
    const auto names = qsbt::verify::suite_names();
    o.tol_values.assign(names.size(), -1.0);
    for (std::size_t k = 0; k < names.size(); ++k) {
        verify->add_option("--tol." + names[k], o.tol_values[k], "tolerance override")->group("Tolerances");
    }
    bool no_timing = false;
    verify->add_flag("--no-timing", no_timing, "report runtime_ms as 0 for byte-identical output");

    auto* transform = app.add_subcommand("transform", "map a coefficient file through B or B^{-1}");
    transform->add_option("--in", o.in, "input CSV (n,w,x,y,z)")->required();
    transform->add_option("--direction", o.direction, "forward (Hermite to Fock) or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}))
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "closed-form norms next to quadrature values");
    table->add_option("which", o.which, "monomial-norms | hermite-norms | kernel-norms")
        ->required()
        ->check(CLI::IsMember({"monomial-norms", "hermite-norms", "kernel-norms"}));
    table->add_option("--n-max", o.n_max, "largest degree (<= 64)")->capture_default_str();
    table->add_option("--q-max", o.q_max, "largest |q| for kernel-norms (<= 3)")->capture_default_str();
    table->add_option("--q-steps", o.q_steps, "number of |q| steps for kernel-norms")->capture_default_str();

    auto* kernel = app.add_subcommand("kernel", "evaluate A(q; x) or K(p, q)");
    kernel->add_option("which", o.kernel, "A | K")->required()->check(CLI::IsMember({"A", "K"}));
    kernel->add_option("--q", o.q_text, "q as w,x,y,z")->required();
    kernel->add_option("--p", o.p_text, "p as w,x,y,z (K only)");
    kernel->add_option("--x", o.x, "real argument x (A only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_pass : exit_config_error;
    }

    try {
        qsbt::verify::validate(c);
        if (verify->parsed()) {
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (o.tol_values[k] >= 0.0 || verify->count("--tol." + names[k]) > 0) {
                    c.tolerance_overrides[names[k]] = o.tol_values[k];
                }
            }
            c.timing = !no_timing;
            return run_verify(o);
        }
        if (transform->parsed()) {
            return run_transform(o);
        }
        if (table->parsed()) {
            return run_table(o);
        }
        return run_kernel(o);
    } catch (const qsbt::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }
}
