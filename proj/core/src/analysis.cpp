/*
 * Copyright 2026 The qrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qrl/analysis.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qrl/approx_series.hpp"
#include "qrl/errors.hpp"
#include "qrl/golden.hpp"

namespace qrl {

namespace {

using ordered_json = nlohmann::ordered_json;

ConvergenceRecord make_record(std::size_t n, const ExactRational& approx, const ExactRational& oracle,
                              std::size_t ref_digits) {
  const ExactRational diff = approx - oracle;
  ConvergenceRecord r;
  r.n = n;
  r.approx = rational_to_decimal(approx, ref_digits);
  r.abs_error = rational_to_decimal(diff.abs(), ref_digits);
  r.error_sign = diff.sign();
  r.correct_digits = std::min(correct_digits(diff, ref_digits), ref_digits);
  return r;
}

// Records for n = 1..n_max and the back-half rate estimate.
struct Sweep {
  std::vector<ConvergenceRecord> records;
  DecimalString rate;
};

template <typename NextApprox>
Sweep sweep(std::size_t n_max, std::size_t ref_digits, const ExactRational& oracle, NextApprox next) {
  const std::size_t steps = n_max / 2;
  const std::size_t rate_from = n_max - steps;
  Sweep s;
  s.records.reserve(n_max);
  ExactRational e_first, e_last;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const ExactRational approx = next(n);
    s.records.push_back(make_record(n, approx, oracle, ref_digits));
    if (n == rate_from) e_first = abs_error(approx, oracle);
    if (n == n_max) e_last = abs_error(approx, oracle);
  }
  s.rate = geometric_rate(e_first, e_last, steps);
  return s;
}

ordered_json record_to_json(const ConvergenceRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["approx"] = r.approx.to_string();
  j["abs_error"] = r.abs_error.to_string();
  j["error_sign"] = r.error_sign;
  j["correct_digits"] = r.correct_digits;
  return j;
}

ConvergenceRecord record_from_json(const nlohmann::json& j) {
  ConvergenceRecord r;
  r.n = j.at("n").get<std::size_t>();
  r.approx = parse_decimal_string(j.at("approx").get<std::string>());
  r.abs_error = parse_decimal_string(j.at("abs_error").get<std::string>());
  r.error_sign = j.at("error_sign").get<int>();
  r.correct_digits = j.at("correct_digits").get<std::size_t>();
  return r;
}

void write_csv_rows(std::ostream& os, const char* method, const std::vector<ConvergenceRecord>& rows) {
  for (const auto& r : rows) {
    os << method << ',' << r.n << ',' << r.approx << ',' << r.abs_error << ',' << r.error_sign << ','
       << r.correct_digits << '\n';
  }
}

std::string sign_text(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

}  // namespace

bool operator==(const ComparisonReport& a, const ComparisonReport& b) {
  return a.n_max == b.n_max && a.ref_digits == b.ref_digits && a.series_records == b.series_records &&
         a.ratio_records == b.ratio_records && a.series_rate_estimate == b.series_rate_estimate &&
         a.ratio_rate_estimate == b.ratio_rate_estimate &&
         a.phi_series_rate_estimate == b.phi_series_rate_estimate && a.first_n_to_reach == b.first_n_to_reach &&
         a.phi_match == b.phi_match;
}

DecimalString geometric_rate(const ExactRational& e_first, const ExactRational& e_last, std::size_t steps) {
  if (steps == 0) throw DomainError("geometric_rate: steps must be >= 1");
  if (e_first.is_zero()) return rational_to_decimal(ExactRational(0), kRateDigits);
  const ExactRational ratio = e_last / e_first;
  // floor(root_k(floor(x))) == floor(root_k(x)), so truncating first is exact.
  const ExactInt scaled = (ratio.num() * ExactInt::pow10(kRateDigits * steps)) / ratio.den();
  const ExactInt root = int_iroot(scaled, steps);
  return rational_to_decimal(ExactRational(root, ExactInt::pow10(kRateDigits)), kRateDigits);
}

ComparisonReport build_comparison(std::size_t n_max, std::size_t ref_digits,
                                  const std::vector<std::size_t>& digit_targets, std::size_t phi_match_digits,
                                  std::size_t cap) {
  if (n_max < 2) throw DomainError("build_comparison: n_max must be >= 2");
  const std::size_t max_target =
      digit_targets.empty() ? 0 : *std::max_element(digit_targets.begin(), digit_targets.end());
  if (ref_digits < max_target + kGuardDigits) {
    throw DomainError("build_comparison: ref_digits must be >= max(targets) + " + std::to_string(kGuardDigits));
  }
  if (ref_digits > cap) {
    throw LimitError("ref_digits " + std::to_string(ref_digits) + " exceeds digit cap " + std::to_string(cap));
  }

  const ExactRational sqrt5 = sqrt5_reference_value(ref_digits, cap);

  auto series_job = std::async(std::launch::async, [&] {
    SeriesPartialSums sums;
    return sweep(n_max, ref_digits, sqrt5, [&](std::size_t) {
      sums.advance();
      return sums.value();
    });
  });
  auto ratio_job = std::async(std::launch::async, [&] {
    ExtraSuperCache cache;
    return sweep(n_max, ref_digits, sqrt5, [&](std::size_t n) { return sqrt5_via_ratio(n, cache); });
  });
  auto phi_job = std::async(std::launch::async, [&] {
    const ExactRational phi = (sqrt5 + ExactRational(1)) / ExactRational(2);
    return sweep(n_max, ref_digits, phi, [](std::size_t n) { return phi_series_partial(n).value; });
  });

  ComparisonReport report;
  report.n_max = n_max;
  report.ref_digits = ref_digits;
  for (std::size_t d : digit_targets) {
    report.first_n_to_reach[d] = {find_min_n(ApproxMethod::series, d, kGuardDigits, cap),
                                  find_min_n(ApproxMethod::ratio, d, kGuardDigits, cap)};
  }
  report.phi_match = find_phi_match(phi_match_digits, kGuardDigits, cap);

  Sweep series = series_job.get();
  Sweep ratio = ratio_job.get();
  report.series_records = std::move(series.records);
  report.series_rate_estimate = std::move(series.rate);
  report.ratio_records = std::move(ratio.records);
  report.ratio_rate_estimate = std::move(ratio.rate);
  report.phi_series_rate_estimate = phi_job.get().rate;
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  if (name == "table") return ReportFormat::table;
  throw ParseError("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const ComparisonReport& report, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::csv:
      os << kCsvHeader << '\n';
      write_csv_rows(os, "series", report.series_records);
      write_csv_rows(os, "ratio", report.ratio_records);
      break;

    case ReportFormat::json: {
      ordered_json j;
      j["n_max"] = report.n_max;
      j["ref_digits"] = report.ref_digits;
      j["series_rate_estimate"] = report.series_rate_estimate.to_string();
      j["ratio_rate_estimate"] = report.ratio_rate_estimate.to_string();
      j["phi_series_rate_estimate"] = report.phi_series_rate_estimate.to_string();
      ordered_json reach = ordered_json::object();
      for (const auto& [d, first] : report.first_n_to_reach) {
        reach[std::to_string(d)] = ordered_json{{"series", first.series}, {"ratio", first.ratio}};
      }
      j["first_n_to_reach"] = std::move(reach);
      const PhiMatch& pm = report.phi_match;
      j["phi_match"] = ordered_json{{"requested_digits", pm.precision_digits},
                                    {"strict_error_n", pm.strict_error_n},
                                    {"prefix_agrees_at_strict_n", pm.prefix_agrees_at_strict_n},
                                    {"prefix_n", pm.prefix_n},
                                    {"paper_claim", pm.paper_claim}};
      ordered_json series = ordered_json::array();
      for (const auto& r : report.series_records) series.push_back(record_to_json(r));
      ordered_json ratio = ordered_json::array();
      for (const auto& r : report.ratio_records) ratio.push_back(record_to_json(r));
      j["series_records"] = std::move(series);
      j["ratio_records"] = std::move(ratio);
      os << j.dump(2) << '\n';
      break;
    }

    case ReportFormat::table: {
      os << "sqrt(5) convergence, n = 1.." << report.n_max << ", oracle at " << report.ref_digits << " digits\n\n";
      os << std::left << std::setw(5) << "n" << std::setw(14) << "series" << "ratio" << '\n';
      os << std::setw(5) << "" << std::setw(6) << "sign" << std::setw(8) << "digits" << std::setw(6) << "sign"
         << "digits" << '\n';
      for (std::size_t i = 0; i < report.series_records.size(); ++i) {
        const auto& s = report.series_records[i];
        const auto& r = report.ratio_records[i];
        os << std::setw(5) << s.n << std::setw(6) << sign_text(s.error_sign) << std::setw(8) << s.correct_digits
           << std::setw(6) << sign_text(r.error_sign) << std::setw(8) << r.correct_digits << '\n';
      }
      os << "\nrate estimate (error ratio per step)\n";
      os << "  series        " << report.series_rate_estimate << '\n';
      os << "  ratio         " << report.ratio_rate_estimate << '\n';
      os << "  phi series    " << report.phi_series_rate_estimate << '\n';
      if (!report.first_n_to_reach.empty()) {
        os << "\nfirst n with |error| < 10^-d\n";
        for (const auto& [d, first] : report.first_n_to_reach) {
          os << "  d=" << std::setw(6) << d << " series " << std::setw(6) << first.series << " ratio "
             << first.ratio << '\n';
        }
      }
      const PhiMatch& pm = report.phi_match;
      os << "\nPhi match at " << pm.precision_digits << " digits\n";
      os << "  strict_error_n " << pm.strict_error_n << '\n';
      os << "  prefix_n       " << pm.prefix_n << '\n';
      os << "  paper_claim    " << pm.paper_claim << ' '
         << (pm.strict_error_n == pm.paper_claim || pm.prefix_n == pm.paper_claim ? "(agrees)" : "(differs)")
         << '\n';
      break;
    }
  }
  return os.str();
}

ComparisonReport parse_report_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ComparisonReport report;
    report.n_max = j.at("n_max").get<std::size_t>();
    report.ref_digits = j.at("ref_digits").get<std::size_t>();
    report.series_rate_estimate = parse_decimal_string(j.at("series_rate_estimate").get<std::string>());
    report.ratio_rate_estimate = parse_decimal_string(j.at("ratio_rate_estimate").get<std::string>());
    report.phi_series_rate_estimate = parse_decimal_string(j.at("phi_series_rate_estimate").get<std::string>());
    for (const auto& [key, value] : j.at("first_n_to_reach").items()) {
      report.first_n_to_reach[std::stoul(key)] = {value.at("series").get<std::size_t>(),
                                                  value.at("ratio").get<std::size_t>()};
    }
    const auto& pm = j.at("phi_match");
    report.phi_match.precision_digits = pm.at("requested_digits").get<std::size_t>();
    report.phi_match.strict_error_n = pm.at("strict_error_n").get<std::size_t>();
    report.phi_match.prefix_agrees_at_strict_n = pm.at("prefix_agrees_at_strict_n").get<bool>();
    report.phi_match.prefix_n = pm.at("prefix_n").get<std::size_t>();
    report.phi_match.paper_claim = pm.at("paper_claim").get<std::size_t>();
    for (const auto& r : j.at("series_records")) report.series_records.push_back(record_from_json(r));
    for (const auto& r : j.at("ratio_records")) report.ratio_records.push_back(record_from_json(r));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  } catch (const std::logic_error& e) {
    // std::stoul on a malformed target key
    throw ParseError(std::string("report json: ") + e.what());
  }
}

}  // namespace qrl
