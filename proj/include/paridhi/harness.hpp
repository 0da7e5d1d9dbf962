#pragma once

#include "paridhi/decimal.hpp"
#include "paridhi/rational.hpp"
#include "paridhi/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paridhi {
namespace harness {

enum class Tradition { Vedic, Sulva, Jaina, Siddhanta, Kerala, External };
const char* tradition_name(Tradition t);

struct MethodResult {
  std::string method_id;
  Tradition tradition;
  QuadSurd exact_form;        // every catalogued value is rational or one surd
  bool reference_is_sqrt2;    // Babylonian row measures against sqrt(2)
  std::string era_label;      // documentation only; not serialized to CSV/JSON
  Decimal value;              // exact_form at the requested digits
  Decimal rel_error;          // signed, 15 fractional digits
  int digits_correct = 0;
  Interval abs_rel_interval;  // certified |relative error| (sort key)
};

// One row per catalogued value, sorted by |rel_error| descending (exact
// interval comparison; ties keep insertion order). digits <= 50.
std::vector<MethodResult> pi_catalog(int digits);

// header: method_id,tradition,exact_form,value,rel_error,digits_correct
std::string catalog_csv(const std::vector<MethodResult>& rows);
std::string catalog_json(const std::vector<MethodResult>& rows);
std::string catalog_table(const std::vector<MethodResult>& rows);

enum class SegmentFormula { jaina_arc, mahavira_area, sridhara_area, bhaskara2_arc };
SegmentFormula parse_segment_formula(const std::string& name);
const char* segment_formula_name(SegmentFormula f);

// Unit radius; rows follow the central angle theta through chord/arrow pairs.
struct SegmentScanRow {
  Rational theta_deg;
  Decimal approx;
  Decimal oracle;
  Decimal rel_error;
};
std::vector<SegmentScanRow> segment_error_scan(SegmentFormula formula,
                                               const std::vector<Rational>& grid_deg,
                                               int digits = 15);
std::string segment_scan_csv(const std::vector<SegmentScanRow>& rows);

struct SineScanRow {
  Rational theta_deg;
  Rational bhaskara;                    // exact formula value
  std::optional<Rational> table_ratio;  // interpolated Rsine / R, theta <= 90
  Decimal oracle;
  std::optional<Decimal> bhaskara_rel;  // absent where sin(theta) = 0
  std::optional<Decimal> table_rel;
};
struct SineScan {
  std::vector<SineScanRow> rows;
  std::optional<SineScanRow> max_bhaskara;  // row with the largest |rel_error|
  std::optional<SineScanRow> max_table;
};
SineScan sine_error_scan(const std::vector<Rational>& grid_deg, int digits = 15);
std::string sine_scan_csv(const SineScan& scan);

// Integer-degree grid helper: start..stop inclusive, positive step.
std::vector<Rational> degree_grid(long start, long stop, long step);

}  // namespace harness
}  // namespace paridhi
