#include "cli.hpp"

#include <cstdlib>
#include <optional>

#include "CLI11.hpp"

#include "constaclass/constafactor.hpp"
#include "constaclass/ntheory.hpp"
#include "render.hpp"
#include "selftest.hpp"
#include "tables.hpp"

namespace constaclass::cli {

namespace {

struct Options {
  std::string field;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> ell;
  std::optional<unsigned> t;
  unsigned s = 0;
  std::string lambda;
  std::string mu;
  std::string format = "text";
  std::uint64_t seed = 0;
  bool full = false;
  bool weights = false;
  bool expand = false;
  int table = 0;
  std::uint64_t max_codes = kDefaultMaxCodes;
  std::uint64_t max_code_size = kDefaultMaxCodeSize;
  std::uint64_t max_n = 64;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Length {
  std::uint64_t n = 0;
  // Set when the length was given as --ell/--t/--s.
  std::optional<nt::EllPowerShape> shape;
};

Length resolve_length(const Options& o, const FiniteField& F) {
  if (o.n && (o.ell || o.t)) throw UsageError("give either --n or --ell/--t/--s, not both");
  if (o.n) {
    if (*o.n == 0) throw UsageError("--n must be positive");
    return {*o.n, std::nullopt};
  }
  if (!o.ell || !o.t) throw UsageError("a length is required: --n, or --ell with --t (and optional --s)");
  std::uint64_t lt = 0;
  std::uint64_t ps = 0;
  if (!nt::checked_pow(*o.ell, *o.t, kMaxLength, lt) || !nt::checked_pow(F.p(), o.s, kMaxLength, ps) ||
      lt > kMaxLength / ps) {
    throw Error(ErrorCode::kLengthTooLarge, "length exceeds the cap of 2^20");
  }
  return {lt * ps, nt::EllPowerShape{*o.ell, *o.t, o.s}};
}

FieldElement require_element(const FiniteField& F, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return parse_element(F, text);
}

Factorization factor_for(const FieldPtr& F, const Length& len, const FieldElement& lambda, std::uint64_t seed) {
  if (len.shape) return factor_consta(F, len.shape->ell, len.shape->t, len.shape->s, lambda);
  return factor_binomial(F, len.n, lambda, seed);
}

json factorization_json(const FiniteField& F, std::uint64_t n, const FieldElement& lambda,
                        const Factorization& f) {
  return {{"field", F.name()},
          {"n", n},
          {"lambda", format_element(lambda)},
          {"case", case_label(f.provenance)},
          {"unit", format_element(f.unit)},
          {"factors", factors_json(f)}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_factor(const Options& o, std::ostream& out) {
  const FieldPtr F = parse_field(o.field);
  const Length len = resolve_length(o, *F);
  const FieldElement lambda = require_element(*F, o.lambda, "--lambda");
  const Factorization f = factor_for(F, len, lambda, o.seed);
  if (o.format == "json") {
    emit_json(out, factorization_json(*F, len.n, lambda, f));
  } else {
    out << factorization_text(f) << '\n';
  }
  return kExitOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const FieldPtr F = parse_field(o.field);
  const Length len = resolve_length(o, *F);
  const auto all = classes(F, len.n);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& c : all) list.push_back(class_json(c, o.full));
    emit_json(out, {{"field", F->name()}, {"n", len.n}, {"class_count", class_count(*F, len.n)}, {"classes", list}});
    return kExitOk;
  }
  out << "field=" << F->name() << "; n=" << len.n << "; classes=" << all.size() << '\n';
  for (std::size_t i = 0; i < all.size(); ++i) out << class_text(i, all[i], o.full) << '\n';
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const FieldPtr F = parse_field(o.field);
  const Length len = resolve_length(o, *F);
  const FieldElement lambda = require_element(*F, o.lambda, "--lambda");
  const FieldElement mu = require_element(*F, o.mu, "--mu");
  const IsometryWitness w = witness(*F, len.n, lambda, mu);
  if (o.format == "json") {
    emit_json(out, {{"field", F->name()},
                    {"n", len.n},
                    {"lambda", format_element(lambda)},
                    {"mu", format_element(mu)},
                    {"a", format_element(w.a)},
                    {"k", w.k}});
  } else {
    out << "a=" << unit_text(w.a) << "; k=" << w.k << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const FieldPtr F = parse_field(o.field);
  const Length len = resolve_length(o, *F);
  const FieldElement lambda = require_element(*F, o.lambda, "--lambda");
  const Factorization f = factor_for(F, len, lambda, o.seed);
  const auto codes = enumerate_codes(f, len.n, lambda, o.max_codes);

  // Enumerators are computed for codes under the cap only.
  auto enumerator_of = [&](const ConstacyclicCode& c) -> std::optional<WeightEnumerator> {
    if (c.size() > o.max_code_size) return std::nullopt;
    return weight_enumerator(c, o.max_code_size);
  };

  if (o.format == "json") {
    json j = factorization_json(*F, len.n, lambda, f);
    json list = json::array();
    for (const auto& c : codes) {
      json entry = {{"exponents", c.exponents},
                    {"generator", poly_json(c.generator)},
                    {"dimension", c.dimension},
                    {"size", power_text(F->q(), c.dimension)}};
      if (o.weights) {
        if (auto we = enumerator_of(c)) {
          entry["weights"] = we->counts;
          entry["distance"] = we->minimum_distance() ? json(*we->minimum_distance()) : json(nullptr);
        } else {
          entry["weights"] = nullptr;
          entry["distance"] = "not computed (size cap)";
        }
      }
      list.push_back(std::move(entry));
    }
    j["codes"] = std::move(list);
    emit_json(out, j);
    return kExitOk;
  }

  out << factorization_text(f) << '\n' << "codes=" << codes.size() << '\n';
  for (const auto& c : codes) {
    out << "e=(";
    for (std::size_t i = 0; i < c.exponents.size(); ++i) out << (i > 0 ? "," : "") << c.exponents[i];
    out << "); g=" << format_poly(c.generator) << "; dim=" << c.dimension
        << "; size=" << power_text(F->q(), c.dimension);
    if (o.weights) {
      if (auto we = enumerator_of(c)) {
        out << "; weights=";
        for (std::size_t w = 0; w < we->counts.size(); ++w) out << (w > 0 ? "," : "") << we->counts[w];
        if (auto d = we->minimum_distance()) {
          out << "; distance=" << *d;
        } else {
          out << "; distance=none";
        }
      } else {
        out << "; distance: not computed (size cap)";
      }
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  json list = json::array();
  bool first = true;
  for (const auto& spec : example_tables()) {
    if (o.table != 0 && spec.id != o.table) continue;
    const Table t = build_table(spec);
    if (o.format == "json") {
      list.push_back(table_json(t, o.expand));
    } else {
      if (!first) out << '\n';
      write_table_text(out, t, o.expand);
    }
    first = false;
  }
  if (first) throw UsageError("--table must be between 1 and 6");
  if (o.format == "json") emit_json(out, list);
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const SelftestReport report = run_selftest(default_selftest_fields(), o.max_n, o.seed);
  if (o.format == "json") {
    json fields = json::array();
    for (const auto& f : report.fields) {
      fields.push_back({{"field", f.field}, {"cases", f.cases}, {"mismatches", f.mismatches}});
    }
    emit_json(out, {{"max_n", o.max_n}, {"fields", fields}, {"failures", report.failures}});
  } else {
    for (const auto& f : report.fields) {
      out << f.field << ": cases=" << f.cases << "; mismatches=" << f.mismatches << '\n';
    }
    for (const auto& failure : report.failures) out << "mismatch: " << failure << '\n';
    out << "total: cases=" << report.cases() << "; mismatches=" << report.mismatches() << '\n';
  }
  return report.mismatches() == 0 ? kExitOk : kExitDomain;
}

int exit_code_for(const Error& e) {
  if (e.is_cap_exceeded()) return kExitCap;
  switch (e.code()) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotPrime:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify constacyclic codes over finite fields and factor X^n - lambda."};
  app.name("constaclass");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "Seed for the randomized oracle (CONSTACLASS_SEED overrides)");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "Field descriptor, e.g. GF(2^4) or GF(5^2);modulus=2,4,1")->required();
  };
  auto add_length = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Code length");
    sub->add_option("--ell", o.ell, "Length as ell^t * p^s: the prime ell");
    sub->add_option("--t", o.t, "Exponent of ell");
    sub->add_option("--s", o.s, "Exponent of the characteristic");
  };

  auto* factor = app.add_subcommand("factor", "Factor X^n - lambda");
  add_field(factor);
  add_length(factor);
  factor->add_option("--lambda", o.lambda, "Constant lambda (xi^k or a0+a1*w+...)");
  add_common(factor);

  auto* cls = app.add_subcommand("classes", "List the n-isometry classes");
  add_field(cls);
  add_length(cls);
  cls->add_flag("--full", o.full, "Do not elide long member lists");
  add_common(cls);

  auto* wit = app.add_subcommand("witness", "Witness (a, k) with a^n lambda = mu^k");
  add_field(wit);
  add_length(wit);
  wit->add_option("--lambda", o.lambda, "Constant lambda");
  wit->add_option("--mu", o.mu, "Constant mu");
  add_common(wit);

  auto* en = app.add_subcommand("enumerate", "List every lambda-constacyclic code");
  add_field(en);
  add_length(en);
  en->add_option("--lambda", o.lambda, "Constant lambda");
  en->add_flag("--weights", o.weights, "Weight enumerators for codes under the size cap");
  en->add_option("--max-codes", o.max_codes, "Cap on the number of codes");
  en->add_option("--max-code-size", o.max_code_size, "Cap on code size for weight enumerators");
  add_common(en);

  auto* tab = app.add_subcommand("tables", "Regenerate the worked example tables");
  tab->add_option("--table", o.table, "Only this table (1-6)");
  tab->add_flag("--expand", o.expand, "List every code of every row");
  add_common(tab);

  auto* self = app.add_subcommand("selftest", "Closed form versus oracle sweep");
  self->add_option("--max-n", o.max_n, "Largest length in the sweep");
  add_common(self);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (const char* env = std::getenv("CONSTACLASS_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: CONSTACLASS_SEED must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  try {
    if (factor->parsed()) return cmd_factor(o, out);
    if (cls->parsed()) return cmd_classes(o, out);
    if (wit->parsed()) return cmd_witness(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (tab->parsed()) return cmd_tables(o, out);
    if (self->parsed()) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace constaclass::cli
