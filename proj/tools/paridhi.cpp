#include "paridhi/decimal.hpp"
#include "paridhi/harness.hpp"
#include "paridhi/jaina.hpp"
#include "paridhi/kerala.hpp"
#include "paridhi/oracle.hpp"
#include "paridhi/rational.hpp"
#include "paridhi/siddhanta.hpp"
#include "paridhi/sulva.hpp"
#include "paridhi/surd.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace paridhi;

BigInt parse_bigint(const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: '" + text + "'");
  return BigInt(text);
}

// Render comma-separated rows as aligned columns (human `table` format).
std::string csv_as_table(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(csv);
  std::string line;
  std::vector<std::size_t> widths;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    if (line.empty() || line.back() == ',') cells.push_back("");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], cells[i].size());
    }
    rows.push_back(std::move(cells));
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      out << rows[r][i];
      if (i + 1 < rows[r].size()) out << std::string(widths[i] - rows[r][i].size() + 2, ' ');
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = widths.empty() ? 0 : 2 * (widths.size() - 1);
      for (std::size_t w : widths) total += w;
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

void print_exact(const std::string& name, const QuadSurd& v, int digits) {
  std::cout << name << " = " << v.to_string(true) << '\n';
  if (!v.is_rational() || !v.rational()->is_integer())
    std::cout << name << " ≈ " << render(v.eval(digits)) << '\n';
}

void run_pi(int digits, const std::string& format) {
  auto rows = harness::pi_catalog(digits);
  if (format == "csv")
    std::cout << harness::catalog_csv(rows);
  else if (format == "json")
    std::cout << harness::catalog_json(rows);
  else
    std::cout << harness::catalog_table(rows);
}

void run_construct(const std::string& method, const std::string& side, int digits) {
  sulva::CirclingMethod m = sulva::CirclingMethod::baudhayana;
  if (method == "manava") m = sulva::CirclingMethod::manava;
  if (method == "maitrayaniya") m = sulva::CirclingMethod::maitrayaniya;
  auto res = sulva::circle_from_square(Rational::parse(side), m, digits);
  std::cout << "method = " << method << '\n';
  std::cout << "side = " << res.side.to_string() << '\n';
  if (res.radius)
    print_exact("radius", *res.radius, digits);
  else
    std::cout << "radius ≈ " << render(res.radius_value) << '\n';
  print_exact("radius^2", res.radius_squared, digits);
  print_exact("implied π", res.implied_pi, digits);
  std::cout << "area ratio ≈ " << render(res.area_ratio) << '\n';
}

void print_formula(const std::string& name, const jaina::FormulaValue& fv) {
  if (fv.exact) std::cout << name << " = " << fv.exact->to_string(true) << '\n';
  std::cout << name << " ≈ " << render(fv.value) << '\n';
}

void run_segment(const std::string& d_text, const std::string& c_text,
                 const std::string& h_text, int digits) {
  Rational d = Rational::parse(d_text);
  jaina::SegmentSpec spec = c_text.empty()
                                ? jaina::segment_from_arrow(Rational::parse(h_text), d)
                                : jaina::segment_from_chord(Rational::parse(c_text), d);
  std::cout << "d = " << d.to_string() << '\n';
  print_exact("c", spec.c, digits);
  print_exact("h", spec.h, digits);
  print_formula("arc", jaina::arc_length(spec.c, spec.h, digits));
  print_formula("mahavira area", jaina::segment_area_mahavira(spec.c, spec.h, digits));
  print_formula("sridhara area", jaina::segment_area_sridhara(spec.c, spec.h, digits));
}

void run_segment_scan(const std::string& formula, long from, long to, long step, int digits,
                      const std::string& format) {
  auto rows = harness::segment_error_scan(harness::parse_segment_formula(formula),
                                          harness::degree_grid(from, to, step), digits);
  std::string csv = harness::segment_scan_csv(rows);
  std::cout << (format == "csv" ? csv : csv_as_table(csv));
}

void run_sine_theta(const std::string& theta_text, int digits) {
  Rational theta = Rational::parse(theta_text);
  harness::SineScan scan = harness::sine_error_scan({theta}, digits);
  const harness::SineScanRow& row = scan.rows.front();
  std::cout << "theta = " << theta.to_string() << '\n';
  std::cout << "bhaskara1 = " << row.bhaskara.to_string() << '\n';
  std::cout << "bhaskara1 ≈ " << render_rational(row.bhaskara, digits) << '\n';
  if (row.bhaskara_rel) std::cout << "bhaskara1 rel ≈ " << render(*row.bhaskara_rel) << '\n';
  if (row.table_ratio) {
    std::cout << "table ratio = " << row.table_ratio->to_string() << '\n';
    std::cout << "table ratio ≈ " << render_rational(*row.table_ratio, digits) << '\n';
    if (row.table_rel) std::cout << "table rel ≈ " << render(*row.table_rel) << '\n';
  }
  std::cout << "oracle ≈ " << render(row.oracle) << '\n';
}

void run_sine_table(long R, const std::string& format) {
  std::string csv = siddhanta::sine_table_csv(siddhanta::sine_table(R));
  std::cout << (format == "csv" ? csv : csv_as_table(csv));
}

void run_sine_scan(long from, long to, long step, int digits, const std::string& format) {
  harness::SineScan scan = harness::sine_error_scan(harness::degree_grid(from, to, step), digits);
  std::string csv = harness::sine_scan_csv(scan);
  if (format == "csv") {
    std::cout << csv;
    return;
  }
  std::cout << csv_as_table(csv);
  if (scan.max_bhaskara)
    std::cout << "largest bhaskara1 rel ≈ "
              << render(*scan.max_bhaskara->bhaskara_rel) << " at theta = "
              << scan.max_bhaskara->theta_deg.to_string() << '\n';
  if (scan.max_table)
    std::cout << "largest table rel ≈ " << render(*scan.max_table->table_rel)
              << " at theta = " << scan.max_table->theta_deg.to_string() << '\n';
}

void run_arc(const std::string& c_text, const std::string& d_text, const std::string& p_text,
             int digits) {
  Rational c = Rational::parse(c_text), d = Rational::parse(d_text);
  siddhanta::ArcResult res = p_text.empty()
                                 ? siddhanta::bhaskara2_arc_oracle_p(c, d, digits)
                                 : siddhanta::bhaskara2_arc(c, d, Rational::parse(p_text), digits);
  std::cout << "radicand = " << res.radicand.to_string() << '\n';
  std::cout << "arc/p = " << res.exact_over_p.to_string(true) << '\n';
  if (res.exact_arc) std::cout << "arc = " << res.exact_arc->to_string(true) << '\n';
  std::cout << "arc ≈ " << render(res.arc) << '\n';
  std::cout << "arc (unsimplified form) ≈ " << render(res.arc_unsimplified) << '\n';
}

void run_kerala(long n, const std::string& sign, int digits, bool trace) {
  kerala::CorrectionSign s =
      sign == "literal" ? kerala::CorrectionSign::literal : kerala::CorrectionSign::empirical;
  if (trace) {
    std::cout << "k,partial_pi,corrected_pi\n";
    Rational partial;
    for (long k = 1; k <= n; ++k) {
      Rational term(1, 2 * k - 1);
      partial += (k % 2 == 1) ? term : -term;
      Rational corr = kerala::end_correction(k);
      bool negate = (s == kerala::CorrectionSign::empirical) ? (k % 2 == 1) : (k % 2 == 0);
      Rational corrected = negate ? partial - corr : partial + corr;
      std::cout << k << ',' << render_rational(Rational(4) * partial, digits) << ','
                << render_rational(Rational(4) * corrected, digits) << '\n';
    }
  }
  kerala::SeriesEstimate est = kerala::corrected_pi(n, s);
  std::cout << "n = " << n << '\n';
  std::cout << "sign rule = " << (s == kerala::CorrectionSign::literal ? "literal" : "empirical")
            << '\n';
  std::cout << "partial sum ≈ " << render_rational(est.partial, digits) << '\n';
  std::cout << "correction ≈ " << render_rational(est.correction, digits) << '\n';
  std::cout << "pi estimate ≈ " << render_rational(est.pi_estimate, digits) << '\n';
  int dc = digits_correct(to_decimal(est.pi_estimate, 30), oracle::pi(30));
  std::cout << "digits_correct: " << dc << '\n';
}

std::vector<RoundMode> parse_policy(const std::string& text) {
  std::vector<RoundMode> policy;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) policy.push_back(siddhanta::parse_round_mode(item));
  if (policy.empty()) throw std::invalid_argument("empty rounding policy");
  return policy;
}

void run_doubling(const std::string& diameter, int doublings, const std::string& mode,
                  const std::string& policy, const std::string& search, bool hp, bool trace,
                  int digits) {
  if (!search.empty()) {
    BigInt target = parse_bigint(search);
    auto ps = siddhanta::policy_search(parse_bigint(diameter), doublings, target);
    std::cout << "perimeter,policies\n";
    for (const auto& [perimeter, count] : ps.histogram)
      std::cout << perimeter.str() << ',' << count << '\n';
    std::cout << "all floor -> " << ps.all_floor.str() << '\n';
    std::cout << "all nearest -> " << ps.all_nearest.str() << '\n';
    std::cout << "all ceil -> " << ps.all_ceil.str() << '\n';
    std::cout << "policies reaching " << target.str() << ": " << ps.target_hits.size() << '\n';
    std::size_t shown = std::min<std::size_t>(ps.target_hits.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& pol = ps.target_hits[i];
      std::cout << "  ";
      for (std::size_t j = 0; j < pol.size(); ++j)
        std::cout << (j ? "," : "") << siddhanta::round_mode_name(pol[j]);
      std::cout << '\n';
    }
    if (ps.target_hits.size() > shown)
      std::cout << "  ... (" << (ps.target_hits.size() - shown) << " more)\n";
    return;
  }
  if (hp) {
    auto res = siddhanta::polygon_doubling_hp(Rational::parse(diameter), doublings, digits);
    if (trace)
      for (std::size_t i = 0; i < res.stage_perimeters.size(); ++i)
        std::cout << "sides " << (6L << i) << ": perimeter ≈ "
                  << render(res.stage_perimeters[i]) << '\n';
    std::cout << "sides = " << res.sides << '\n';
    std::cout << "perimeter ≈ " << render(res.perimeter) << '\n';
    std::cout << "perimeter/diameter ≈ " << render(res.ratio) << '\n';
    return;
  }
  std::vector<RoundMode> pol = policy.empty() ? parse_policy(mode) : parse_policy(policy);
  auto res = siddhanta::polygon_doubling_integer(parse_bigint(diameter), doublings, pol);
  if (trace)
    for (const auto& step : res.trace)
      std::cout << "sides " << step.sides << ": X = " << step.x.str() << ", u = " << step.u.str()
                << ", v = " << step.v.str() << '\n';
  std::cout << "sides = " << res.sides << '\n';
  std::cout << "perimeter = " << res.perimeter.str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and high-precision arithmetic for classical circle rules"};
  app.require_subcommand(1);
  // `segment --h` (arrow) must stay available, so help binds only to --help.
  app.set_help_flag("--help", "print help and exit");
  auto digits_range = CLI::Range(1, 50);

  auto* pi_cmd = app.add_subcommand("pi", "catalog of circle-rule values against the pi oracle");
  int pi_digits = 15;
  std::string pi_format = "table";
  pi_cmd->add_option("--digits", pi_digits, "fractional digits for the value column")
      ->check(digits_range);
  pi_cmd->add_option("--format", pi_format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  pi_cmd->callback([&] { run_pi(pi_digits, pi_format); });

  auto* con_cmd = app.add_subcommand("construct", "circle a square: exact radius and implied pi");
  std::string con_method, con_side;
  int con_digits = 15;
  con_cmd->add_option("--method", con_method, "construction rule")
      ->required()
      ->check(CLI::IsMember({"baudhayana", "manava", "maitrayaniya"}));
  con_cmd->add_option("--side", con_side, "square side, p/q or decimal")->required();
  con_cmd->add_option("--digits", con_digits, "fractional digits")->check(digits_range);
  con_cmd->callback([&] { run_construct(con_method, con_side, con_digits); });

  auto* seg_cmd = app.add_subcommand("segment", "circular segment: chord, arrow, arc, area");
  seg_cmd->set_help_flag("--help", "print help and exit");
  std::string seg_d, seg_c, seg_h, seg_formula, seg_format = "table";
  int seg_digits = 15;
  long seg_from = 10, seg_to = 180, seg_step = 10;
  bool seg_scan = false;
  auto* seg_d_opt = seg_cmd->add_option("--d", seg_d, "diameter");
  auto* seg_c_opt = seg_cmd->add_option("--c", seg_c, "chord");
  auto* seg_h_opt = seg_cmd->add_option("--h", seg_h, "arrow (sagitta)");
  auto* seg_scan_opt = seg_cmd->add_flag("--scan", seg_scan, "error scan over central angles");
  auto* seg_formula_opt =
      seg_cmd->add_option("--formula", seg_formula, "formula to scan")
          ->check(CLI::IsMember({"jaina_arc", "mahavira_area", "sridhara_area", "bhaskara2_arc"}));
  seg_cmd->add_option("--from", seg_from, "scan start, degrees");
  seg_cmd->add_option("--to", seg_to, "scan stop, degrees");
  seg_cmd->add_option("--step", seg_step, "scan step, degrees");
  seg_cmd->add_option("--digits", seg_digits, "fractional digits")->check(digits_range);
  seg_cmd->add_option("--format", seg_format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  seg_c_opt->excludes(seg_h_opt);
  seg_scan_opt->needs(seg_formula_opt);
  seg_formula_opt->needs(seg_scan_opt);
  seg_cmd->callback([&] {
    if (seg_scan) {
      run_segment_scan(seg_formula, seg_from, seg_to, seg_step, seg_digits, seg_format);
      return;
    }
    if (seg_d_opt->count() == 0 || (seg_c.empty() && seg_h.empty()))
      throw CLI::RequiredError("segment needs --d with --c or --h (or --scan --formula)");
    run_segment(seg_d, seg_c, seg_h, seg_digits);
  });

  auto* sin_cmd = app.add_subcommand("sine", "sine rules against the oracle");
  std::string sin_theta, sin_format = "table";
  long sin_table_r = 0, sin_from = 5, sin_to = 175, sin_step = 5;
  bool sin_scan = false;
  int sin_digits = 15;
  auto* sin_theta_opt = sin_cmd->add_option("--theta", sin_theta, "angle in degrees");
  auto* sin_table_opt = sin_cmd->add_option("--table", sin_table_r, "emit the Rsine table for R");
  auto* sin_scan_opt = sin_cmd->add_flag("--scan", sin_scan, "error scan over a degree grid");
  sin_cmd->add_option("--from", sin_from, "scan start, degrees");
  sin_cmd->add_option("--to", sin_to, "scan stop, degrees");
  sin_cmd->add_option("--step", sin_step, "scan step, degrees");
  sin_cmd->add_option("--digits", sin_digits, "fractional digits")->check(digits_range);
  sin_cmd->add_option("--format", sin_format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  sin_theta_opt->excludes(sin_table_opt)->excludes(sin_scan_opt);
  sin_table_opt->excludes(sin_scan_opt);
  sin_cmd->callback([&] {
    if (sin_theta_opt->count())
      run_sine_theta(sin_theta, sin_digits);
    else if (sin_table_opt->count())
      run_sine_table(sin_table_r, sin_format);
    else if (sin_scan)
      run_sine_scan(sin_from, sin_to, sin_step, sin_digits, sin_format);
    else
      throw CLI::RequiredError("sine needs one of --theta, --table, --scan");
  });

  auto* arc_cmd = app.add_subcommand("arc", "arc from chord, diameter, circumference");
  std::string arc_c, arc_d, arc_p;
  int arc_digits = 15;
  arc_cmd->add_option("--c", arc_c, "chord")->required();
  arc_cmd->add_option("--d", arc_d, "diameter")->required();
  arc_cmd->add_option("--p", arc_p, "circumference (default: oracle pi * d)");
  arc_cmd->add_option("--digits", arc_digits, "fractional digits")->check(digits_range);
  arc_cmd->callback([&] { run_arc(arc_c, arc_d, arc_p, arc_digits); });

  auto* ker_cmd = app.add_subcommand("kerala", "alternating series with end correction");
  long ker_n = 0;
  std::string ker_sign = "empirical";
  int ker_digits = 15;
  bool ker_trace = false;
  ker_cmd->add_option("--n", ker_n, "number of series terms")->required();
  ker_cmd->add_option("--sign", ker_sign, "correction sign rule")
      ->check(CLI::IsMember({"literal", "empirical"}));
  ker_cmd->add_option("--digits", ker_digits, "fractional digits")->check(digits_range);
  ker_cmd->add_flag("--trace", ker_trace, "print per-term estimates");
  ker_cmd->callback([&] { run_kerala(ker_n, ker_sign, ker_digits, ker_trace); });

  auto* dbl_cmd = app.add_subcommand("doubling", "inscribed-polygon doubling from the hexagon");
  std::string dbl_diameter, dbl_mode = "nearest", dbl_policy, dbl_search;
  int dbl_doublings = 6, dbl_digits = 15;
  bool dbl_hp = false, dbl_trace = false;
  dbl_cmd->add_option("--diameter", dbl_diameter, "circle diameter")->required();
  dbl_cmd->add_option("--doublings", dbl_doublings, "hexagon doublings (0..20)");
  dbl_cmd->add_option("--mode", dbl_mode, "rounding mode for every stage")
      ->check(CLI::IsMember({"floor", "nearest", "ceil"}));
  dbl_cmd->add_option("--policy", dbl_policy, "comma list: one mode per stage plus final");
  auto* dbl_search_opt =
      dbl_cmd->add_option("--search", dbl_search, "enumerate all policies; report this target");
  auto* dbl_hp_opt = dbl_cmd->add_flag("--hp", dbl_hp, "certified high-precision mode");
  dbl_cmd->add_flag("--trace", dbl_trace, "print per-stage values");
  dbl_cmd->add_option("--digits", dbl_digits, "fractional digits (hp mode)")->check(digits_range);
  dbl_hp_opt->excludes(dbl_search_opt);
  dbl_cmd->callback([&] {
    run_doubling(dbl_diameter, dbl_doublings, dbl_mode, dbl_policy, dbl_search, dbl_hp, dbl_trace,
                 dbl_digits);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
