#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cob2/cobordism.hpp"
#include "cob2/dsl.hpp"
#include "cob2/dw_oracle.hpp"
#include "cob2/evaluator.hpp"
#include "cob2/frobenius.hpp"
#include "cob2/group.hpp"
#include "cob2/io.hpp"

namespace cob2::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::size_t max_entries = EvalConfig{}.max_tensor_entries;
  std::string field;

  std::string algebra_path;
  std::string word;
  std::string word2;
  std::string out_format = "json";
  std::size_t genus = 0;
  std::string group;
  std::size_t max_genus = 3;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inline word text, or "@path" for a .cob file.
CobordismWord load_word(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return parse(read_file(arg.substr(1)));
  return parse(arg);
}

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  if (o.field == "rational") return FieldSpec::rational();
  std::uint64_t p = 0;
  std::istringstream in(o.field);
  if (!(in >> p) || !in.eof()) throw UsageError("--field expects 'rational' or a prime, got '" + o.field + "'");
  return FieldSpec::prime(p);
}

FrobeniusAlgebraData load_algebra(const Options& o) {
  return algebra_from_json(read_file(o.algebra_path), field_override(o));
}

EvalConfig config(const Options& o) { return EvalConfig{o.max_entries}; }

int report_status(const CheckReport& report, std::ostream& out) {
  out << report.summary();
  out << "overall: " << (report.passed() ? "pass" : "FAIL") << "\n";
  return report.passed() ? kSuccess : kCheckFailure;
}

int cmd_validate(const Options& o, std::ostream& out) {
  return report_status(check_all(load_algebra(o)), out);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const CobordismWord w = load_word(o.word);
  const Tqft z(load_algebra(o), config(o));
  const ExactMatrix m = z(w);
  if (o.out_format == "csv") {
    out << matrix_to_csv(m);
  } else {
    out << matrix_to_json(m) << "\n";
  }
  return kSuccess;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const Tqft z(load_algebra(o), config(o));
  out << z.genus_invariant(o.genus) << "\n";
  return kSuccess;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const bool same = is_equivalent(load_word(o.word), load_word(o.word2));
  out << (same ? "equivalent" : "not equivalent") << "\n";
  return same ? kSuccess : kCheckFailure;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  out << format(normal_form(load_word(o.word))) << "\n";
  return kSuccess;
}

int cmd_relations(const Options& o, std::ostream& out) {
  return report_status(check_relations(load_algebra(o), config(o)), out);
}

FiniteGroup load_group(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return group_from_json(read_file(arg.substr(1)));
  if (arg.size() > 5 && arg.ends_with(".json")) return group_from_json(read_file(arg));
  return group_by_name(arg);
}

int cmd_dw(const Options& o, std::ostream& out) {
  const FiniteGroup g = load_group(o.group);
  const FieldSpec field = field_override(o).value_or(FieldSpec::rational());
  const Tqft center(group_center(g, field), config(o));
  std::optional<Tqft> algebra;
  if (g.is_abelian()) algebra.emplace(group_algebra(g, field), config(o));

  out << "genus\tcommutators\toracle\tevaluator\tstatus\n";
  bool all_match = true;
  for (std::size_t genus = 0; genus <= o.max_genus; ++genus) {
    const std::uint64_t count = commutator_count(g, genus);
    const FieldValue oracle = FieldValue::from_rational(field, dw_partition(g, genus).rational());
    const FieldValue value = center.genus_invariant(genus);
    bool match = value == oracle;
    if (algebra) match = match && algebra->genus_invariant(genus) == oracle;
    all_match = all_match && match;
    out << genus << "\t" << count << "\t" << oracle << "\t" << value << "\t"
        << (match ? "match" : "MISMATCH") << "\n";
  }
  return all_match ? kSuccess : kCheckFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact 2D TQFT workbench: cobordism words, Frobenius algebras, Dijkgraaf-Witten checks",
               "cob2"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--max-entries", o.max_entries, "Dense size limit per layer map")
      ->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "Coefficient field: 'rational' or a prime p");

  auto* validate = app.add_subcommand("validate", "Check every Frobenius algebra axiom");
  validate->add_option("algebra", o.algebra_path, "Algebra JSON file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a word to an exact matrix");
  eval->add_option("word", o.word, "Word text or @file.cob")->required();
  eval->add_option("algebra", o.algebra_path, "Algebra JSON file")->required();
  eval->add_option("--out", o.out_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* invariant = app.add_subcommand("invariant", "Closed genus-g surface invariant");
  invariant->add_option("--genus", o.genus, "Genus")->required();
  invariant->add_option("algebra", o.algebra_path, "Algebra JSON file")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide whether two words are equivalent");
  equiv->add_option("word1", o.word, "Word text or @file.cob")->required();
  equiv->add_option("word2", o.word2, "Word text or @file.cob")->required();

  auto* normalize = app.add_subcommand("normalize", "Print the canonical word");
  normalize->add_option("word", o.word, "Word text or @file.cob")->required();

  auto* relations = app.add_subcommand("relations", "Evaluate every generator relation");
  relations->add_option("algebra", o.algebra_path, "Algebra JSON file")->required();

  auto* dw = app.add_subcommand("dw", "Compare the Dijkgraaf-Witten oracle with the evaluator");
  dw->add_option("--group", o.group, "S3, D4, Q8, C<n>, products like C2xC2, or a group JSON file")
      ->required();
  dw->add_option("--max-genus", o.max_genus, "Largest genus to compare");

  for (auto* sub : {validate, eval, invariant, equiv, normalize, relations, dw}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (invariant->parsed()) return cmd_invariant(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (normalize->parsed()) return cmd_normalize(o, out);
    if (relations->parsed()) return cmd_relations(o, out);
    if (dw->parsed()) return cmd_dw(o, out);
  } catch (const InvalidAlgebra& e) {
    err << e.what();
    return kCheckFailure;
  } catch (const DegeneratePairing& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const DerivedStructureInvalid& e) {
    err << e.what();
    return kCheckFailure;
  } catch (const EvalTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cob2::cli
