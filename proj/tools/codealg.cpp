// codealg: build code algebras from binary linear codes, analyse their
// idempotents, fusion laws, forms and automorphism groups, and reproduce the
// worked examples.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "codealg/fixtures.hpp"
#include "codealg/io.hpp"

using namespace codealg;

namespace {

struct CommonOpts {
  std::string code_file, params_file;
  bool json_out = false;
  std::vector<std::string> lambdas;
  long disc = 0;
  int bound = 512;
};

CodeAlgebra load_algebra(const CommonOpts& opt) {
  LinearCode C = load_code_file(opt.code_file);
  ParsedParams P = load_params_file(opt.params_file);
  if (opt.disc != 0) P.disc = opt.disc;
  if (P.disc && !is_squarefree(*P.disc))
    throw Error(errc::parse_error, "--disc must be squarefree and nonzero");
  // a declared discriminant founds the session even with rational parameters;
  // surd parameters must agree with it
  CodeAlgebra A = build_algebra(C, realize_params(C, P));
  if (P.disc && A.session_disc() != 1 && A.session_disc() != *P.disc)
    throw Error(errc::discriminant_mismatch, "parameters use a different surd than --disc");
  return A;
}

std::optional<Vec> lambda_overrides(const CodeAlgebra& A, const std::vector<std::string>& ls) {
  if (ls.empty()) return std::nullopt;
  Vec lam(A.n(), Scalar(1));
  for (const auto& s : ls) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw Error(errc::parse_error, "--lambda expects i=<scalar>, got '" + s + "'");
    int i = std::stoi(s.substr(0, eq));
    if (i < 1 || i > A.n()) throw Error(errc::parse_error, "--lambda index out of range");
    lam[i - 1] = parse_scalar(s.substr(eq + 1));
  }
  return lam;
}

Element parse_element_spec(const CodeAlgebra& A, const std::string& spec, json* extra) {
  std::istringstream ss(spec);
  std::string kind;
  ss >> kind;
  if (kind == "t") {
    int i;
    if (!(ss >> i) || i < 1 || i > A.n())
      throw Error(errc::parse_error, "usage: t <i> with 1 <= i <= n");
    return A.basis_element(i - 1);
  }
  if (kind == "small") {
    std::string bits, sign;
    if (!(ss >> bits >> sign) || (sign != "plus" && sign != "minus"))
      throw Error(errc::parse_error, "usage: small <alpha-bits> plus|minus");
    auto s = small_idempotents(A, word_from_str(bits));
    (*extra)["lambda"] = s.lambda.str();
    (*extra)["mu"] = s.mu.str();
    return sign == "plus" ? s.plus : s.minus;
  }
  if (kind == "smap") {
    std::string dspec, vspec, root;
    if (!(ss >> dspec >> vspec >> root) || (root != "plus" && root != "minus"))
      throw Error(errc::parse_error, "usage: smap full|<gen,gen,...> <v-bits>|all plus|minus");
    LinearCode D = A.code();
    if (dspec != "full") {
      std::vector<std::string> rows;
      std::string row;
      std::istringstream ds(dspec);
      while (std::getline(ds, row, ',')) rows.push_back(row);
      D = LinearCode::from_generators(rows);
    }
    if (vspec == "all")
      throw Error(errc::parse_error, "use the report output of enumerate for v = all");
    auto r = smap_idempotent(A, D, word_from_str(vspec),
                             root == "plus" ? Root::Plus : Root::Minus);
    (*extra)["lambda"] = r.spec.lambda.str();
    (*extra)["mu"] = r.spec.mu.str();
    if (r.spec.extension_disc != 1) (*extra)["extension_disc"] = r.spec.extension_disc;
    return r.idem;
  }
  // coordinate literal x1,x2,...
  std::vector<std::string> parts;
  std::string part;
  std::istringstream ps(spec);
  while (std::getline(ps, part, ',')) parts.push_back(part);
  if (int(parts.size()) != A.dim())
    throw Error(errc::parse_error, "coordinate literal needs dim = " + std::to_string(A.dim()) +
                                       " entries");
  Element x = A.zero();
  for (int i = 0; i < A.dim(); ++i) x[i] = parse_scalar(parts[i]);
  return x;
}

void emit(const json& j, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << render_text(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"code algebras from binary linear codes"};
  app.require_subcommand(1);
  CommonOpts opt;

  auto add_common = [&](CLI::App* cmd, bool needs_files) {
    if (needs_files) {
      cmd->add_option("--code", opt.code_file, "code file (n k header plus generator rows)")
          ->required();
      cmd->add_option("--params", opt.params_file, "structure parameter file")->required();
    }
    cmd->add_flag("--json", opt.json_out, "machine-readable output");
    cmd->add_option("--lambda", opt.lambdas, "Frobenius toral weight i=<p/q>");
    cmd->add_option("--bound", opt.bound, "orbit growth bound (default 512)");
    cmd->add_option("--disc", opt.disc, "field discriminant d for Q(sqrt(d))");
  };

  auto* rep = app.add_subcommand("report", "algebra summary: dimensions, identity, "
                                           "simplicity, Frobenius form, groups");
  add_common(rep, true);

  auto* spec = app.add_subcommand("spectrum", "eigenvalues, fusion law and axis check of "
                                              "one element");
  add_common(spec, true);
  std::string element_spec;
  spec->add_option("--element", element_spec,
                   "\"t i\" | \"small <bits> plus|minus\" | \"smap full|<gens> <bits> "
                   "plus|minus\" | coordinate literal")
      ->required();

  auto* ex = app.add_subcommand("examples", "run a worked example and diff against its "
                                            "stored report");
  std::string example_name;
  bool print_golden = false;
  ex->add_option("name", example_name, "f2sq | even3 | hamming8")->required();
  add_common(ex, false);
  ex->add_flag("--print-golden", print_golden, "print the canonical report and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rep->parsed()) {
      CodeAlgebra A = load_algebra(opt);
      json j = algebra_report(A);
      if (!opt.lambdas.empty()) {
        auto frob = frobenius_form(A, lambda_overrides(A, opt.lambdas));
        j["frobenius_custom"] = json{{"exists", frob.ok()}};
        if (frob.ok())
          j["frobenius_custom"]["toral_diag"] = scalar_list_json(frob.form->lambda_toral);
        else
          j["frobenius_custom"]["failure"] = frob.witness;
      }
      emit(j, opt.json_out);
      return 0;
    }
    if (spec->parsed()) {
      CodeAlgebra A = load_algebra(opt);
      json extra;
      Element x = parse_element_spec(A, element_spec, &extra);
      json j = element_report(A, x);
      if (!extra.is_null()) j["construction"] = extra;
      emit(j, opt.json_out);
      return 0;
    }
    if (ex->parsed()) {
      json actual = fixtures::run_example(example_name, size_t(opt.bound));
      if (print_golden) {
        std::cout << actual.dump() << "\n";
        return 0;
      }
      std::string expected_text = fixtures::golden(example_name);
      if (expected_text.empty())
        throw Error(errc::fixture_mismatch, "no stored golden for '" + example_name + "'");
      auto diffs = fixtures::diff(json::parse(expected_text), actual);
      if (!diffs.empty()) {
        std::cerr << "FixtureMismatch:\n";
        for (const auto& d : diffs) std::cerr << "  " << d << "\n";
        return 1;
      }
      emit(actual, opt.json_out);
      if (!opt.json_out) std::cout << "fixture matches the stored report\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
