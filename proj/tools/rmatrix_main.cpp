#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rmatrix/catalog.hpp"
#include "rmatrix/io.hpp"
#include "rmatrix/manin.hpp"
#include "rmatrix/sheaf.hpp"
#include "rmatrix/verify.hpp"

namespace {

using namespace rmatrix;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_file, std::ios::binary);
  if (!os) throw Error("cannot open output file '" + out_file + "'");
  os << text;
}

std::string read_input(const std::string& in_file) {
  std::ifstream is(in_file, std::ios::binary);
  if (!is) throw ParseError("cannot open input file '" + in_file + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Tensor2 load_tensor2(const std::string& in_file) {
  Document doc = parse_document(read_input(in_file));
  if (auto* t = std::get_if<Tensor2>(&doc.payload)) return *t;
  throw ParseError("input document is not a two-tensor");
}

int cmd_compute(const std::string& curve, int n, const std::string& out_file) {
  Tensor2 r = geometric_r(n, curve_from_name(curve));
  write_output(serialize(Document{std::move(r)}), out_file);
  return kExitOk;
}

int cmd_catalog_list() {
  for (const auto& name : catalog_names()) {
    CatalogEntry probe = (name == "stolin_sl2") ? catalog_emit(name, 2) : catalog_emit(name, 2);
    std::ostringstream flags;
    bool first = true;
    for (Flag f : probe.flags) {
      if (!first) flags << ",";
      flags << flag_name(f);
      first = false;
    }
    std::cout << name << (name == "stolin_sl2" ? "  (n = 2)" : "  (n >= 2)") << "  [" << flags.str()
              << "]\n";
  }
  return kExitOk;
}

int cmd_catalog_emit(const std::string& name, int n, const std::string& out_file) {
  CatalogEntry entry = catalog_emit(name, n);
  write_output(serialize(Document{std::move(entry.tensor)}), out_file);
  return kExitOk;
}

int cmd_verify(const std::string& in_file, const std::string& identity, const std::string& at) {
  Tensor2 r = load_tensor2(in_file);
  Verdict v;
  v.identity = identity;
  if (identity == "cybe") {
    Tensor3 lhs = cybe_lhs(r);
    v.pass = is_zero(lhs);
    if (!v.pass) v.witness = first_witness(lhs);
  } else if (identity == "gcybe") {
    Tensor3 lhs = gcybe_lhs(r);
    v.pass = is_zero(lhs);
    if (!v.pass) v.witness = first_witness(lhs);
  } else if (identity == "skew") {
    Tensor2 sum = t2_sum(flip(r), r);
    v.pass = is_zero(sum);
    if (!v.pass) v.witness = first_witness(sum);
  } else if (identity == "nondeg") {
    BigRat px(1), py(2);
    if (!at.empty()) {
      auto comma = at.find(',');
      if (comma == std::string::npos) throw ParseError("--at expects 'x,y'");
      px = parse_rational(at.substr(0, comma));
      py = parse_rational(at.substr(comma + 1));
    }
    v.pass = nondegenerate_at(r, px, py);
    if (!v.pass) v.witness = "map has zero determinant at the sample point";
  } else {
    throw CLI::ValidationError("--identity must be one of cybe|gcybe|skew|nondeg");
  }
  std::cout << v.identity << ": " << (v.pass ? "PASS" : "FAIL");
  if (!v.pass && !v.witness.empty()) std::cout << "  witness " << v.witness;
  std::cout << "\n";
  return v.pass ? kExitOk : kExitCheckFailed;
}

int cmd_expand(const std::string& in_file, int order, const std::string& out_file) {
  Tensor2 r = load_tensor2(in_file);
  SeriesTensor s = expand(r, order);
  write_output(serialize(Document{std::move(s)}), out_file);
  return kExitOk;
}

int cmd_reconstruct(const std::string& in_file, int order) {
  Tensor2 r = load_tensor2(in_file);
  SeriesTensor s = expand(r, order);
  WBasis w = w_basis(s);
  bool coiso = coisotropy_check(w);
  bool lagr = lagrangian_complement_check(w);
  bool round_trip = false;
  if (lagr) {
    SeriesTensor rebuilt = dual_basis_reconstruct(w);
    round_trip = rebuilt.coeff == s.coeff;
  }
  std::cout << "coisotropy: " << (coiso ? "PASS" : "FAIL") << "\n";
  std::cout << "lagrangian-complement: " << (lagr ? "PASS" : "FAIL") << "\n";
  std::cout << "dual-basis round-trip: " << (round_trip ? "PASS" : "FAIL") << "\n";
  return (coiso && lagr && round_trip) ? kExitOk : kExitCheckFailed;
}

int cmd_compare(const std::string& a_file, const std::string& b_file) {
  Tensor2 a = load_tensor2(a_file);
  Tensor2 b = load_tensor2(b_file);
  if (a.n != b.n) {
    std::cout << "differ: ranks " << a.n << " and " << b.n << "\n";
    return kExitCheckFailed;
  }
  Tensor2 diff = t2_sum(a, t2_negate(b));
  if (is_zero(diff)) {
    std::cout << "equal\n";
    return kExitOk;
  }
  std::cout << "differ: " << first_witness(diff) << "\n";
  return kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of r-matrices on singular cubic curves"};
  app.require_subcommand(1);

  std::string curve, out_file, in_file, identity, at, name, a_file, b_file;
  int n = 2;
  int order = 6;

  auto* compute = app.add_subcommand("compute", "construct the geometric r-matrix");
  compute->add_option("--curve", curve, "nodal or cuspidal")->required();
  compute->add_option("--n", n, "rank (>= 2)")->required();
  compute->add_option("--out", out_file, "output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "closed-form solutions");
  auto* cat_list = catalog->add_subcommand("list", "list catalog entries");
  auto* cat_emit = catalog->add_subcommand("emit", "emit an entry as a document");
  cat_emit->add_option("name", name, "entry name")->required();
  cat_emit->add_option("--n", n, "rank (>= 2)")->required();
  cat_emit->add_option("--out", out_file, "output file (default stdout)");
  catalog->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check an identity on a stored tensor");
  verify->add_option("--in", in_file, "input document")->required();
  verify->add_option("--identity", identity, "cybe|gcybe|skew|nondeg")->required();
  verify->add_option("--at", at, "sample point 'x,y' for nondeg (default 1,2)");

  auto* expand_cmd = app.add_subcommand("expand", "series expansion in |x| < |y|");
  expand_cmd->add_option("--in", in_file, "input document")->required();
  expand_cmd->add_option("--order", order, "truncation order")->required();
  expand_cmd->add_option("--out", out_file, "output file (default stdout)");

  auto* reconstruct = app.add_subcommand("reconstruct", "series round-trip through the dual basis");
  reconstruct->add_option("--in", in_file, "input document")->required();
  reconstruct->add_option("--order", order, "truncation order (default 6)");

  auto* compare = app.add_subcommand("compare", "exact equality of two stored tensors");
  compare->add_option("--a", a_file, "first document")->required();
  compare->add_option("--b", b_file, "second document")->required();

  try {
    app.parse(argc, argv);
    if (compute->parsed()) return cmd_compute(curve, n, out_file);
    if (catalog->parsed()) {
      if (cat_list->parsed()) return cmd_catalog_list();
      if (cat_emit->parsed()) return cmd_catalog_emit(name, n, out_file);
    }
    if (verify->parsed()) return cmd_verify(in_file, identity, at);
    if (expand_cmd->parsed()) return cmd_expand(in_file, order, out_file);
    if (reconstruct->parsed()) return cmd_reconstruct(in_file, order);
    if (compare->parsed()) return cmd_compare(a_file, b_file);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
