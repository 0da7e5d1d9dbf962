#include "paridhi/harness.hpp"

#include "paridhi/jaina.hpp"
#include "paridhi/kerala.hpp"
#include "paridhi/oracle.hpp"
#include "paridhi/siddhanta.hpp"
#include "paridhi/sulva.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paridhi {
namespace harness {

namespace {

constexpr int kInternalDigits = 30;

struct RowSpec {
  const char* id;
  Tradition trad;
  QuadSurd exact;
  bool vs_sqrt2;
  const char* era;
};

// Insertion order doubles as the tie-break for equal-value entries.
std::vector<RowSpec> catalog_specs() {
  auto baudh = sulva::circle_from_square(Rational(1), sulva::CirclingMethod::baudhayana, 5);
  auto manav = sulva::circle_from_square(Rational(1), sulva::CirclingMethod::manava, 5);
  auto maitra = sulva::circle_from_square(Rational(1), sulva::CirclingMethod::maitrayaniya, 5);
  Rational squaring_side = sulva::square_from_circle(Rational(1));  // unit diameter
  QuadSurd squaring_pi = QuadSurd(Rational(4) * squaring_side * squaring_side);

  std::vector<RowSpec> specs;
  specs.push_back({"vedic_three", Tradition::Vedic, QuadSurd(Rational(3)), false,
                   "altar verse, one across and three around"});
  specs.push_back({"manava_sixteen_fifths", Tradition::Vedic, QuadSurd(Rational(16, 5)), false,
                   "Manava circumference rule"});
  specs.push_back({"baudhayana_circling", Tradition::Sulva, baudh.implied_pi, false,
                   "Baudhayana circling of the square"});
  specs.push_back({"manava_circling", Tradition::Sulva, manav.implied_pi, false,
                   "Manava circling of the square"});
  specs.push_back({"maitrayaniya_circling", Tradition::Sulva, maitra.implied_pi, false,
                   "Maitrayaniya circling of the square"});
  specs.push_back({"sulva_squaring", Tradition::Sulva, squaring_pi, false,
                   "four-term squaring of the circle"});
  specs.push_back({"jaina_sqrt10", Tradition::Jaina, QuadSurd::sqrt_rational(Rational(10)), false,
                   "canonical root-ten circumference"});
  specs.push_back({"virasena", Tradition::Jaina,
                   QuadSurd(jaina::virasena_circumference(Rational(1))), false,
                   "Virasena's circumference verse"});
  specs.push_back({"aryabhata", Tradition::Siddhanta, QuadSurd(siddhanta::aryabhata_pi()), false,
                   "62832 around a diameter of 20000"});
  specs.push_back({"madhava", Tradition::Kerala, QuadSurd(kerala::madhava_value()), false,
                   "2827433388233 over 9e11"});
  specs.push_back({"kerala_corrected_n50", Tradition::Kerala,
                   QuadSurd(kerala::corrected_pi(50).pi_estimate), false,
                   "fifty series terms plus end correction"});
  specs.push_back({"ptolemy", Tradition::External, QuadSurd(Rational(377, 120)), false,
                   "chord-table value 3;8,30"});
  specs.push_back({"babylonian_sqrt2", Tradition::External,
                   QuadSurd(Rational(30547, 21600)), true,
                   "sexagesimal 1;24,51,10 against sqrt(2)"});
  specs.push_back({"egyptian_16_9", Tradition::External, QuadSurd(Rational(256, 81)), false,
                   "(16/9)^2 from the octagon rule"});
  specs.push_back({"zu_chongzhi", Tradition::External, QuadSurd(Rational(355, 113)), false,
                   "milu fraction"});
  return specs;
}

Interval abs_interval(const Interval& x) {
  if (x.hi().sign() < 0) return -x;
  if (x.lo().sign() > 0) return x;
  Rational reach = std::max(-x.lo(), x.hi());
  return Interval(Rational(0), reach);
}

}  // namespace

const char* tradition_name(Tradition t) {
  switch (t) {
    case Tradition::Vedic: return "Vedic";
    case Tradition::Sulva: return "Sulva";
    case Tradition::Jaina: return "Jaina";
    case Tradition::Siddhanta: return "Siddhanta";
    case Tradition::Kerala: return "Kerala";
    case Tradition::External: return "External";
  }
  throw std::logic_error("unreachable tradition");
}

std::vector<MethodResult> pi_catalog(int digits) {
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must be in 1..50");

  Interval pi_ref = oracle::pi_interval(kInternalDigits);
  Decimal pi_dec = oracle::pi(kInternalDigits);
  Decimal rt2_dec = oracle::sqrt_rat(Rational(2), kInternalDigits);
  Interval rt2_ref = Interval::of(rt2_dec);

  std::vector<MethodResult> rows;
  for (const RowSpec& spec : catalog_specs()) {
    const Interval& ref = spec.vs_sqrt2 ? rt2_ref : pi_ref;
    const Decimal& ref_dec = spec.vs_sqrt2 ? rt2_dec : pi_dec;

    MethodResult row;
    row.method_id = spec.id;
    row.tradition = spec.trad;
    row.exact_form = spec.exact;
    row.reference_is_sqrt2 = spec.vs_sqrt2;
    row.era_label = spec.era;
    row.value = spec.exact.eval(digits);

    Interval val = spec.exact.interval(kInternalDigits);
    Interval rel = (val - ref) / ref;
    row.rel_error = rel.to_decimal(15);
    row.abs_rel_interval = abs_interval(rel);
    row.digits_correct = digits_correct(spec.exact.eval(kInternalDigits), ref_dec);
    rows.push_back(std::move(row));
  }

  // Certified descending sort on |rel_error|: intervals overlap only for
  // identical exact values, where stability keeps the insertion order.
  std::stable_sort(rows.begin(), rows.end(), [](const MethodResult& a, const MethodResult& b) {
    return b.abs_rel_interval.strictly_less(a.abs_rel_interval);
  });
  return rows;
}

std::string catalog_csv(const std::vector<MethodResult>& rows) {
  std::ostringstream out;
  out << "method_id,tradition,exact_form,value,rel_error,digits_correct\n";
  for (const MethodResult& r : rows) {
    out << r.method_id << ',' << tradition_name(r.tradition) << ','
        << r.exact_form.to_string(false) << ',' << render(r.value) << ','
        << render(r.rel_error, 15) << ',' << r.digits_correct << '\n';
  }
  return out.str();
}

std::string catalog_json(const std::vector<MethodResult>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const MethodResult& r : rows) {
    nlohmann::ordered_json obj;
    obj["method_id"] = r.method_id;
    obj["tradition"] = tradition_name(r.tradition);
    obj["exact_form"] = r.exact_form.to_string(false);
    obj["value"] = render(r.value);
    obj["rel_error"] = render(r.rel_error, 15);
    obj["digits_correct"] = r.digits_correct;
    obj["reference"] = r.reference_is_sqrt2 ? "sqrt(2)" : "pi";
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string catalog_table(const std::vector<MethodResult>& rows) {
  struct Line {
    std::string id, trad, form, value, rel, dc;
  };
  std::vector<Line> lines;
  lines.push_back({"method_id", "tradition", "exact_form", "value", "rel_error", "dc"});
  for (const MethodResult& r : rows) {
    lines.push_back({r.method_id, tradition_name(r.tradition), r.exact_form.to_string(true),
                     render(r.value), render(r.rel_error, 15), std::to_string(r.digits_correct)});
  }

  // Column widths in code points (the only multi-byte glyph used is the radical).
  auto glyph_len = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char ch : s)
      if ((ch & 0xC0) != 0x80) ++n;
    return n;
  };
  std::size_t w[6] = {0, 0, 0, 0, 0, 0};
  for (const Line& l : lines) {
    const std::string* cells[6] = {&l.id, &l.trad, &l.form, &l.value, &l.rel, &l.dc};
    for (int i = 0; i < 6; ++i) w[i] = std::max(w[i], glyph_len(*cells[i]));
  }
  std::ostringstream out;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string* cells[6] = {&l.id, &l.trad, &l.form, &l.value, &l.rel, &l.dc};
    for (int i = 0; i < 6; ++i) {
      out << *cells[i];
      if (i < 5) out << std::string(w[i] - glyph_len(*cells[i]) + 2, ' ');
    }
    out << '\n';
    if (li == 0) {
      std::size_t total = 10;  // two-space gaps
      for (std::size_t wi : w) total += wi;
      out << std::string(total, '-') << '\n';
    }
  }
  return out.str();
}

SegmentFormula parse_segment_formula(const std::string& name) {
  if (name == "jaina_arc") return SegmentFormula::jaina_arc;
  if (name == "mahavira_area") return SegmentFormula::mahavira_area;
  if (name == "sridhara_area") return SegmentFormula::sridhara_area;
  if (name == "bhaskara2_arc") return SegmentFormula::bhaskara2_arc;
  throw std::invalid_argument("unknown formula: " + name);
}

const char* segment_formula_name(SegmentFormula f) {
  switch (f) {
    case SegmentFormula::jaina_arc: return "jaina_arc";
    case SegmentFormula::mahavira_area: return "mahavira_area";
    case SegmentFormula::sridhara_area: return "sridhara_area";
    case SegmentFormula::bhaskara2_arc: return "bhaskara2_arc";
  }
  throw std::logic_error("unreachable formula");
}

std::vector<SegmentScanRow> segment_error_scan(SegmentFormula formula,
                                               const std::vector<Rational>& grid_deg,
                                               int digits) {
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must be in 1..50");
  const int w = digits + 10;
  Interval pi_iv = oracle::pi_interval(w);
  QuadSurd rt10 = QuadSurd::sqrt_rational(Rational(10));
  Interval rt10_iv = rt10.interval(w);

  std::vector<SegmentScanRow> rows;
  for (const Rational& theta : grid_deg) {
    if (theta.sign() <= 0 || theta > Rational(180))
      throw std::domain_error("central angle must be in (0, 180]");
    Rational half = theta / Rational(2);
    Interval sin_half = Interval::of(oracle::sin_deg(half, w));
    Interval cos_half = Interval::of(oracle::sin_deg(Rational(90) - half, w));
    Interval c = Interval(Rational(2)) * sin_half;  // chord, unit radius
    Interval h = Interval(Rational(1)) - cos_half;  // arrow
    Interval theta_rad = Interval(theta) * pi_iv / Interval(Rational(180));

    Interval approx, exact;
    switch (formula) {
      case SegmentFormula::jaina_arc: {
        Interval six(Rational(6));
        approx = (six * h * h + c * c).sqrt(w);
        exact = theta_rad;
        break;
      }
      case SegmentFormula::mahavira_area: {
        approx = rt10_iv * c * h / Interval(Rational(4));
        Interval sin_theta = Interval::of(oracle::sin_deg(theta, w));
        exact = (theta_rad - sin_theta) / Interval(Rational(2));
        break;
      }
      case SegmentFormula::sridhara_area: {
        approx = rt10_iv * h * (c + h) / Interval(Rational(6));
        Interval sin_theta = Interval::of(oracle::sin_deg(theta, w));
        exact = (theta_rad - sin_theta) / Interval(Rational(2));
        break;
      }
      case SegmentFormula::bhaskara2_arc: {
        Interval d(Rational(2)), p = pi_iv * d;
        Interval four(Rational(4)), five(Rational(5));
        Interval radicand = Interval(Rational(1)) - five * c / (c + four * d);
        approx = p / d * (Interval(Rational(1)) - radicand.sqrt(w));
        exact = theta_rad;
        break;
      }
    }

    SegmentScanRow row;
    row.theta_deg = theta;
    row.approx = approx.to_decimal(digits);
    row.oracle = exact.to_decimal(digits);
    row.rel_error = ((approx - exact) / exact).to_decimal(digits);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string segment_scan_csv(const std::vector<SegmentScanRow>& rows) {
  std::ostringstream out;
  out << "theta_deg,approx,oracle,rel_error\n";
  for (const SegmentScanRow& r : rows)
    out << r.theta_deg.to_string() << ',' << render(r.approx) << ',' << render(r.oracle) << ','
        << render(r.rel_error) << '\n';
  return out.str();
}

SineScan sine_error_scan(const std::vector<Rational>& grid_deg, int digits) {
  if (digits < 1 || digits > 50) throw std::invalid_argument("digits must be in 1..50");
  const int w = digits + 10;
  siddhanta::SineTable table = siddhanta::sine_table(3438);
  Rational R(3438);

  SineScan scan;
  Rational best_bh(-1), best_tab(-1);  // |center| high-water marks
  for (const Rational& theta : grid_deg) {
    if (theta.sign() < 0 || theta > Rational(180))
      throw std::domain_error("theta must be in [0, 180]");
    SineScanRow row;
    row.theta_deg = theta;
    row.bhaskara = siddhanta::bhaskara1_sine(theta);
    Decimal sin_ref = oracle::sin_deg(theta, w);
    row.oracle = Interval::of(sin_ref).to_decimal(digits);
    if (theta <= Rational(90))
      row.table_ratio = siddhanta::interpolate_rsine(table, theta) / R;

    bool sin_zero = theta.is_zero() || theta == Rational(180);
    if (!sin_zero) {
      Interval ref = Interval::of(sin_ref);
      row.bhaskara_rel = ((Interval(row.bhaskara) - ref) / ref).to_decimal(digits);
      if (row.table_ratio)
        row.table_rel = ((Interval(*row.table_ratio) - ref) / ref).to_decimal(digits);

      Rational bh_center = row.bhaskara_rel->center().abs();
      if (bh_center > best_bh) {
        best_bh = bh_center;
        scan.max_bhaskara = row;
      }
      if (row.table_rel) {
        Rational tab_center = row.table_rel->center().abs();
        if (tab_center > best_tab) {
          best_tab = tab_center;
          scan.max_table = row;
        }
      }
    }
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

std::string sine_scan_csv(const SineScan& scan) {
  std::ostringstream out;
  out << "theta_deg,bhaskara1,bhaskara1_rel,table_ratio,table_rel,oracle\n";
  for (const SineScanRow& r : scan.rows) {
    out << r.theta_deg.to_string() << ',' << r.bhaskara.to_string() << ',';
    if (r.bhaskara_rel) out << render(*r.bhaskara_rel);
    out << ',';
    if (r.table_ratio) out << r.table_ratio->to_string();
    out << ',';
    if (r.table_rel) out << render(*r.table_rel);
    out << ',' << render(r.oracle) << '\n';
  }
  return out.str();
}

std::vector<Rational> degree_grid(long start, long stop, long step) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  if (stop < start) throw std::invalid_argument("grid stop must not precede start");
  std::vector<Rational> grid;
  for (long v = start; v <= stop; v += step) grid.emplace_back(static_cast<long long>(v));
  return grid;
}

}  // namespace harness
}  // namespace paridhi
