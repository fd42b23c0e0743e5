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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "qrl/analysis.hpp"
#include "qrl/approx_ratio.hpp"
#include "qrl/approx_series.hpp"
#include "qrl/errors.hpp"
#include "qrl/golden.hpp"
#include "qrl/sequences.hpp"

namespace qrl::cli {

namespace {

struct Options {
  // seq gen / seq check
  std::string seq_kind;
  std::size_t seq_n = 0;
  std::string seq_method = "rec";
  std::string seq_file;

  // sqrt5 / sqrt5 find-n
  std::string sqrt5_method;
  std::optional<std::size_t> sqrt5_n;
  std::optional<std::size_t> sqrt5_digits;
  std::string find_method;
  std::size_t find_digits = 0;

  // phi / phi conj
  std::string phi_method;
  std::size_t phi_n = 0;
  std::size_t phi_digits = 0;

  std::size_t match_digits = 0;

  // compare
  std::size_t n_max = 0;
  std::size_t ref_digits = 0;
  std::vector<std::size_t> targets;
  std::string format;
  std::string out_path;
  std::size_t phi_match_digits = kDefaultPhiMatchDigits;
};

void require_cap(std::size_t digits) {
  const std::size_t cap = digit_cap();
  if (digits > cap) {
    throw LimitError("requested " + std::to_string(digits) + " digits, cap is " + std::to_string(cap));
  }
}

int seq_gen(const Options& o, std::ostream& out) {
  IntSequence seq;
  if (o.seq_kind == "min-super") {
    seq = minimal_super(o.seq_n);
  } else if (o.seq_method == "def") {
    seq = minimal_extra_super(o.seq_n);
  } else {
    seq = minimal_extra_super_fast(o.seq_n);
  }
  for (const auto& t : seq.terms) out << t << '\n';
  return kExitOk;
}

int seq_check(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.seq_file);
  if (!in) {
    err << "error: cannot open " << o.seq_file << '\n';
    return kExitError;
  }
  IntSequence seq;
  try {
    seq = parse_sequence(in);
  } catch (const ParseError& e) {
    err << "error: " << o.seq_file << ": " << e.what() << '\n';
    return kExitError;
  }
  if (seq.terms.empty()) {
    err << "error: " << o.seq_file << ": no terms\n";
    return kExitError;
  }
  const ValidationResult r =
      o.seq_kind == "super" ? is_super_increasing(seq) : is_extra_super_increasing(seq);
  if (r.valid) {
    out << "valid\n";
    return kExitOk;
  }
  out << "invalid at index " << *r.first_violation_index << ": " << to_string(r.reason) << '\n';
  return kExitInvalid;
}

int sqrt5_value(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.sqrt5_n || o.sqrt5_method.empty()) {
    err << "error: sqrt5 requires --method and --n\n";
    return kExitError;
  }
  const ExactRational q =
      o.sqrt5_method == "series" ? sqrt5_series_partial(*o.sqrt5_n) : sqrt5_via_ratio(*o.sqrt5_n);
  if (o.sqrt5_digits) {
    require_cap(*o.sqrt5_digits);
    out << rational_to_decimal(q, *o.sqrt5_digits) << '\n';
  } else if (auto exact = terminating_decimal(q)) {
    out << *exact << '\n';
  } else {
    out << q << '\n';
  }
  return kExitOk;
}

int sqrt5_find_n(const Options& o, std::ostream& out) {
  const ApproxMethod m = o.find_method == "series" ? ApproxMethod::series : ApproxMethod::ratio;
  out << find_min_n(m, o.find_digits) << '\n';
  return kExitOk;
}

int phi_value(const Options& o, bool conjugate, std::ostream& out) {
  require_cap(o.phi_digits);
  const PhiApproximant phi =
      o.phi_method == "cf" ? phi_continued_fraction(o.phi_n) : phi_series_partial(o.phi_n);
  const ExactRational v = conjugate ? phi_conjugate(phi.value) : phi.value;
  out << rational_to_decimal(v, o.phi_digits) << '\n';
  return kExitOk;
}

int phi_match(const Options& o, std::ostream& out) {
  const PhiMatch m = find_phi_match(o.match_digits);
  out << "digits " << m.precision_digits << '\n'
      << "strict_error_n " << m.strict_error_n << '\n'
      << "prefix_n " << m.prefix_n << '\n'
      << "paper_claim " << m.paper_claim << '\n';
  return kExitOk;
}

int compare(const Options& o, std::ostream& out, std::ostream& err) {
  const ComparisonReport report = build_comparison(o.n_max, o.ref_digits, o.targets, o.phi_match_digits);
  const std::string text = emit_report(report, parse_report_format(o.format));
  if (o.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << o.out_path << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact approximants of sqrt(5) and the golden ratio", "qrl"};
  app.require_subcommand(1);

  auto* seq = app.add_subcommand("seq", "Minimal (extra-)super-increasing sequences");
  seq->require_subcommand(1);
  auto* gen = seq->add_subcommand("gen", "Print terms z_0..z_n, one per line");
  gen->add_option("--kind", o.seq_kind)->required()->check(CLI::IsMember({"min-super", "min-extra-super"}));
  gen->add_option("--n", o.seq_n)->required();
  gen->add_option("--method", o.seq_method, "def: definitional sum, rec: recurrence")
      ->check(CLI::IsMember({"def", "rec"}));
  auto* check = seq->add_subcommand("check", "Validate a sequence file");
  check->add_option("--kind", o.seq_kind)->required()->check(CLI::IsMember({"super", "extra-super"}));
  check->add_option("--file", o.seq_file)->required();

  auto* sqrt5 = app.add_subcommand("sqrt5", "Approximate sqrt(5)");
  sqrt5->add_option("--method", o.sqrt5_method)->check(CLI::IsMember({"series", "ratio"}));
  sqrt5->add_option("--n", o.sqrt5_n);
  sqrt5->add_option("--digits", o.sqrt5_digits, "truncate to this many fractional digits");
  auto* find_n = sqrt5->add_subcommand("find-n", "Smallest n with |error| < 10^-D");
  find_n->add_option("--method", o.find_method)->required()->check(CLI::IsMember({"series", "ratio"}));
  find_n->add_option("--digits", o.find_digits)->required()->check(CLI::PositiveNumber);

  auto* phi = app.add_subcommand("phi", "Approximate the golden ratio");
  auto add_phi_options = [&](CLI::App* sub, bool required) {
    auto* m = sub->add_option("--method", o.phi_method)->check(CLI::IsMember({"cf", "series"}));
    auto* n = sub->add_option("--n", o.phi_n, "continued-fraction depth or number of series terms");
    auto* d = sub->add_option("--digits", o.phi_digits);
    if (required) {
      m->required();
      n->required();
      d->required();
    }
  };
  add_phi_options(phi, false);
  auto* conj = phi->add_subcommand("conj", "Print the conjugate phi - 1");
  add_phi_options(conj, true);

  auto* match = app.add_subcommand("phi-match", "Smallest n with nu_n - mu_n matching Phi");
  match->add_option("--digits", o.match_digits)->required()->check(CLI::PositiveNumber);

  auto* cmp = app.add_subcommand("compare", "Convergence report for both sqrt(5) methods");
  cmp->add_option("--n-max", o.n_max)->required();
  cmp->add_option("--ref-digits", o.ref_digits)->required();
  cmp->add_option("--targets", o.targets)->delimiter(',');
  cmp->add_option("--format", o.format)->required()->check(CLI::IsMember({"csv", "json", "table"}));
  cmp->add_option("--out", o.out_path);
  cmp->add_option("--phi-digits", o.phi_match_digits, "precision for the Phi match summary")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return seq_gen(o, out);
    if (*check) return seq_check(o, out, err);
    if (*find_n) return sqrt5_find_n(o, out);
    if (*sqrt5) return sqrt5_value(o, out, err);
    if (*conj) return phi_value(o, true, out);
    if (*phi) {
      if (o.phi_method.empty() || phi->count("--n") == 0 || phi->count("--digits") == 0) {
        err << "error: phi requires --method, --n and --digits\n";
        return kExitError;
      }
      return phi_value(o, false, out);
    }
    if (*match) return phi_match(o, out);
    if (*cmp) return compare(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace qrl::cli
