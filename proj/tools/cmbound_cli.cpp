// Command line front end: class groups, Hilbert polynomials, L-values,
// discriminant bounds and the special-point sieve.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmbound/cmbound.hpp>
#include <cmbound/report_json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace cmbound;

namespace {

enum exit_code
{
    exit_ok = 0,
    exit_error = 1,
    exit_hypothesis = 2,
    exit_resource = 3,
    exit_parse = 4,
};

std::string read_curve_text(std::string const & arg)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::vector<double> parse_grid(std::string const & s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(std::stod(item));
    if (v.empty())
        throw invalid_argument("empty epsilon grid");
    return v;
}

void print_bound(BoundReport const & r)
{
    std::cout << "log threshold  " << std::setprecision(17) << r.log_threshold << "\n";
    if (!r.threshold)
        std::cout << "threshold      not written out (over 10^5 digits)\n";
    else if (r.threshold->get_str().size() <= 60)
        std::cout << "threshold      " << r.threshold->get_str() << "\n";
    else
        std::cout << "threshold      " << r.threshold->get_str().size() << "-digit integer\n";
    std::cout << "epsilon        (" << r.epsilon1 << ", " << r.epsilon2 << ")\n";
    std::cout << "caveat         valid except possibly one exceptional imaginary quadratic field\n";
    std::cout << "audit\n";
    for (auto const & e : r.audit)
        std::cout << "  " << std::left << std::setw(15) << e.name << std::setw(24) << e.value << e.formula << "\n";
}

void print_json(nlohmann::json const & j, std::string const & out)
{
    if (out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw resource_error("cannot write " + out);
    f << j.dump(2) << "\n";
}

int cmd_classgroup(i64 d)
{
    Discriminant disc(d);
    auto cg = class_group(disc);
    std::cout << "D              " << d << "\n"
              << "fundamental    " << disc.fundamental_part() << "\n"
              << "conductor      " << disc.conductor() << "\n"
              << "order          " << cg.order << "\n"
              << "structure      ";
    if (cg.elementary_divisors.empty())
        std::cout << "trivial";
    for (std::size_t i = 0; i < cg.elementary_divisors.size(); ++i)
        std::cout << (i ? " x " : "") << "Z/" << cg.elementary_divisors[i];
    std::cout << "\n2-torsion      " << two_torsion_size(disc) << "\nforms         ";
    for (auto const & f : cg.reduced_forms)
        std::cout << " (" << f.a << "," << f.b << "," << f.c << ")";
    std::cout << "\n";
    return exit_ok;
}

int cmd_hilbert(i64 d)
{
    auto h = hilbert_class_poly(Discriminant(d));
    std::cout << poly_to_string(h.poly, 'x') << "\n";
    return exit_ok;
}

int cmd_lvalue(i64 d, double tol)
{
    Discriminant disc(d);
    RealCharacter chi(disc);
    double l = l_one(chi, tol);
    double h = roots_of_unity(d) * std::sqrt(static_cast<double>(disc.abs())) * l / (2 * std::numbers::pi);
    std::cout << std::setprecision(15) << "L(1,chi)       " << l << "\n"
              << "w sqrt|D| L/2pi " << h << "\n"
              << "h(D)           " << reduced_forms(disc).size() << "\n"
              << "formula check  " << (class_number_formula_check(disc, tol) ? "ok" : "MISMATCH") << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{ "Class groups, CM points and effective discriminant bounds" };
    app.require_subcommand(1);

    i64 disc = 0;
    auto * cg = app.add_subcommand("classgroup", "class group of an imaginary quadratic order");
    cg->add_option("D", disc, "negative discriminant")->required();
    auto * hi = app.add_subcommand("hilbert", "Hilbert class polynomial");
    hi->add_option("D", disc, "negative discriminant")->required();
    double tol = 1e-9;
    auto * lv = app.add_subcommand("lvalue", "L(1,chi_D) and the class number formula");
    lv->add_option("D", disc, "negative fundamental discriminant")->required();
    lv->add_option("--tol", tol, "absolute tolerance");

    int r = 2;
    double c5 = 1;
    long deg_pi = 1;
    std::string grid_text;
    std::string json_out;
    auto * bh = app.add_subcommand("bound-heegner", "discriminant bound for Heegner points");
    bh->add_option("--r", r, "number of points (>= 2)")->required();
    bh->add_option("--c5", c5, "effective Serre constant")->required();
    bh->add_option("--deg-pi", deg_pi, "degree of the modular parametrization")->required();
    bh->add_option("--eps-grid", grid_text, "comma separated epsilon values");
    bh->add_option("--json", json_out, "write report as JSON (- for stdout)");

    std::string curve_arg;
    int field_degree = 1;
    auto * ba = app.add_subcommand("bound-ao", "discriminant bound for special points on a curve");
    ba->add_option("--curve", curve_arg, "polynomial F(x,y) or a file containing it")->required();
    ba->add_option("--field-degree", field_degree, "degree of the field of definition");
    ba->add_option("--eps-grid", grid_text, "comma separated epsilon values");
    ba->add_option("--json", json_out, "write report as JSON (- for stdout)");

    std::optional<i64> cap;
    i64 max_cap = default_max_scan_cap;
    auto * sv = app.add_subcommand("sieve", "special points on a plane curve");
    sv->add_option("--curve", curve_arg, "polynomial F(x,y) or a file containing it")->required();
    sv->add_option("--cap", cap, "largest |D| to enumerate");
    sv->add_option("--max-cap", max_cap, "refuse scans beyond this |D|");
    sv->add_option("--field-degree", field_degree, "degree of the field of definition");
    sv->add_option("--eps-grid", grid_text, "comma separated epsilon values");
    sv->add_option("--json", json_out, "write report as JSON (- for stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        EpsGrid grid = grid_text.empty() ? default_eps_grid() : product_grid(parse_grid(grid_text));
        if (*cg)
            return cmd_classgroup(disc);
        if (*hi)
            return cmd_hilbert(disc);
        if (*lv)
            return cmd_lvalue(disc, tol);
        if (*bh) {
            auto rep = heegner_c1({ r, c5, deg_pi }, grid);
            if (!json_out.empty())
                print_json(to_json(rep), json_out);
            if (json_out != "-")
                print_bound(rep);
            return exit_ok;
        }
        if (*ba) {
            CurveSpec c = parse_curve(read_curve_text(curve_arg), field_degree);
            StripResult s = strip_degenerate(c);
            double c9 = derive_c9(s.curve);
            auto rep = andre_oort_c11({ 2, c9 }, grid);
            if (!json_out.empty())
                print_json(to_json(rep), json_out);
            if (json_out != "-") {
                std::cout << "curve          " << s.curve.poly.to_string() << "\n";
                std::cout << "c9             " << c9 << "\n";
                print_bound(rep);
            }
            return exit_ok;
        }
        if (*sv) {
            CurveSpec c = parse_curve(read_curve_text(curve_arg), field_degree);
            SieveOptions opt;
            opt.max_cap = max_cap;
            opt.grid = grid;
            auto rep = sieve(c, cap, opt);
            if (!json_out.empty())
                print_json(to_json(rep), json_out);
            if (json_out == "-")
                return exit_ok;
            for (auto const & w : c.warnings)
                std::cerr << "warning: " << w << "\n";
            std::cout << "curve          " << rep.stripped.poly.to_string() << "\n";
            for (auto const & z : rep.z_prime)
                std::cout << "fiber          " << z.to_string() << "\n";
            std::cout << "c9             " << rep.c9 << "\n"
                      << "c11 log        " << std::setprecision(17) << rep.c11.log_threshold << "\n"
                      << "cap            " << rep.enumeration_cap << " (" << to_string(rep.cap_vs_bound) << ")\n"
                      << "hits           " << rep.hits.size() << "\n";
            for (auto const & h : rep.hits)
                std::cout << "  D1=" << h.d1 << " D2=" << h.d2 << (h.same_cm_field ? " same field" : " distinct fields")
                          << "  witness " << poly_to_string(h.witness, 'x') << "\n";
            return exit_ok;
        }
    } catch (hypothesis_violation const & e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return exit_hypothesis;
    } catch (resource_error const & e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (parse_error const & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
