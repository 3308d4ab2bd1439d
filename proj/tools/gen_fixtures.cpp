// Writes the bundled spec files. Usage: gen_fixtures <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ainf/derham.hpp"
#include "ainf/product_model.hpp"
#include "ainf/pseudoisotopy.hpp"
#include "ainf/spec_io.hpp"

using namespace ainf;

namespace {

AInfAlgebra renamed(const AInfAlgebra& alg, const std::string& name) {
  auto cs = alg.constants();
  for (auto& c : cs) c.id.clear();
  return AInfAlgebra(name, alg.basis(), alg.monoid(), alg.cutoff(), alg.unit(), std::move(cs));
}

SubalgebraEmbedding retarget(const SubalgebraEmbedding& e, const std::string& name, const AInfAlgebra& source,
                             const AInfAlgebra& target) {
  return {name, source, target, e.images};
}

// Unital graded-commutative algebra on e, x, y, z (degrees 0, 1, 1, 2) with
// x y = z, a differential x -> z at energy dE, optional curvature z at energy
// curvE and curvature lam * e at (lamE, 2).
AInfAlgebra gapped_factor(const std::string& name, const std::vector<std::string>& names, Scalar dE,
                          std::optional<Scalar> curvE, Scalar lam, Scalar lamE) {
  GradedBasis basis({{names[0], 0}, {names[1], 1}, {names[2], 1}, {names[3], 2}});
  const MonoidElement zero{};
  std::vector<Constant> cs;
  for (int a = 0; a < 4; ++a) {
    cs.push_back({2, zero, {0, a}, a, 1, ""});
    if (a) cs.push_back({2, zero, {a, 0}, a, Scalar(basis.degree(a) % 2 ? -1 : 1), ""});
  }
  cs.push_back({2, zero, {1, 2}, 3, -1, ""});
  cs.push_back({2, zero, {2, 1}, 3, 1, ""});
  const MonoidElement d{dE, 0};
  cs.push_back({1, d, {1}, 3, 1, ""});
  std::vector<MonoidElement> gens{d, {lamE, 2}};
  if (curvE) {
    gens.push_back({*curvE, 0});
    cs.push_back({0, {*curvE, 0}, {}, 3, 1, ""});
  }
  cs.push_back({0, {lamE, 2}, {}, 0, lam, ""});
  return AInfAlgebra(name, basis, EnergyMonoid(gens), std::nullopt, 0, std::move(cs));
}

AInfAlgebra factor_a() { return gapped_factor("A", {"e", "x", "y", "z"}, 1, Scalar(3, 2), 3, 2); }
AInfAlgebra factor_b() { return gapped_factor("B", {"f", "p", "r", "s"}, Scalar(1, 2), std::nullopt, 5, 1); }

// Homotopy on the factor A: c_{1,(1,0)}(x) = t y and c_{2,(1,0)}(x, y) = y / 2.
std::vector<IsoConstant> homotopy_a() {
  return {{1, {1, 0}, {1}, 2, TPoly::t(), ""}, {2, {1, 0}, {1, 2}, 2, TPoly(Scalar(1, 2)), ""}};
}

Json doc() { return Json{{"version", kSpecVersion}}; }

void push(Json& d, const char* section, Json value) {
  if (!d.contains(section)) d[section] = Json::array();
  d[section].push_back(std::move(value));
}

Json derham_t1() {
  Json d = doc();
  d["description"] = "de Rham model of the circle restricted to constant coefficients";
  push(d, "algebras", algebra_to_json(derham_algebra(1, 0)));
  return d;
}

Json derham_t2() {
  Json d = doc();
  d["description"] = "de Rham model of T^2 with Fourier frequencies in [-2, 2]";
  push(d, "algebras", algebra_to_json(derham_algebra(2)));
  return d;
}

Json derham_pair() {
  Json d = doc();
  d["description"] = "two circles inside T^2 with the signed pullbacks";
  const auto e1 = derham_embedding(1, 1, 1);
  const auto e2 = derham_embedding(1, 1, 2);
  const auto t1a = renamed(e1.source, "derham_t1_a");
  const auto t1b = renamed(e2.source, "derham_t1_b");
  const auto t2 = e1.target;
  push(d, "algebras", algebra_to_json(t1a));
  push(d, "algebras", algebra_to_json(t1b));
  push(d, "algebras", algebra_to_json(t2));
  push(d, "embeddings", embedding_to_json(retarget(e1, "iota1", t1a, t2)));
  push(d, "embeddings", embedding_to_json(retarget(e2, "iota2", t1b, t2)));
  push(d, "pairs", {{"name", "circles"}, {"emb_a", "iota1"}, {"emb_b", "iota2"}});
  return d;
}

Json gapped_pair() {
  Json d = doc();
  d["description"] = "two curved gapped factors and their product, with a nontrivial bounding cochain on A";
  const auto a = factor_a();
  const auto b = factor_b();
  const auto pm = tensor_with_commutative(a, b, "C");
  push(d, "algebras", algebra_to_json(a));
  push(d, "algebras", algebra_to_json(b));
  push(d, "algebras", algebra_to_json(pm.algebra));
  push(d, "embeddings", embedding_to_json(retarget(pm.emb_a, "iota_A", a, pm.algebra)));
  push(d, "embeddings", embedding_to_json(retarget(pm.emb_b, "iota_B", b, pm.algebra)));
  AlgElement b1;
  b1.add(1, Scalar(-1), Scalar(1, 2));
  push(d, "cochains", cochain_to_json("b1", "A", b1, a.basis()));
  push(d, "cochains", cochain_to_json("b2", "B", AlgElement{}, b.basis()));
  push(d, "cochains", cochain_to_json("b12", "C", pm.emb_a.apply(b1), pm.algebra.basis()));
  push(d, "pairs", {{"name", "AB"}, {"emb_a", "iota_A"}, {"emb_b", "iota_B"}, {"b1", "b1"}, {"b2", "b2"}});
  return d;
}

// Isotopies modulo T^1 ending at A mod T^1, for both parities, with the chain
// of targets A mod T^{3/2}, A mod T^2.
Json isotopy() {
  Json d = doc();
  d["description"] = "isotopies on A modulo T^1 and their extensions to T^2";
  const auto a = factor_a();
  push(d, "algebras", algebra_to_json(renamed(a.truncated(1), "A_1")));
  push(d, "algebras", algebra_to_json(renamed(a.truncated(Scalar(3, 2)), "A_3/2")));
  push(d, "algebras", algebra_to_json(renamed(a.truncated(2), "A_2")));
  for (int n : {0, 1}) {
    const std::string suffix = n ? "odd" : "even";
    const auto p = solve_isotopy_from_end(renamed(a.truncated(1), "A_1"), homotopy_a(), n, "P_" + suffix);
    const auto m0 = renamed(p.at(0), "M0_" + suffix);
    push(d, "algebras", algebra_to_json(m0));
    push(d, "isotopies", isotopy_to_json(p.with_endpoints(m0, p.end().value())));
    push(d, "extensions", {{"name", "ext_" + suffix}, {"isotopy", "P_" + suffix}, {"targets", {"A_3/2", "A_2"}}});
  }
  const auto triv = Pseudoisotopy::constant(renamed(a.truncated(1), "A_1"), 1, "P_trivial");
  push(d, "isotopies", isotopy_to_json(triv));
  push(d, "extensions", {{"name", "ext_trivial"}, {"isotopy", "P_trivial"}, {"targets", {"A_2"}}});
  return d;
}

// PA on A (n1 = 1), B held constant (n2 = 1), PC = PA (x) B, all modulo T^1,
// with extensions of each to T^2.
Json commuting_isotopy() {
  Json d = doc();
  d["description"] = "commuting isotopy triple on the gapped pair with n1 = n2 = 1";
  const int n1 = 1, n2 = 1;
  const auto a = factor_a();
  const auto b = factor_b();
  const auto c = tensor_with_commutative(a, b, "C").algebra;
  const auto pa = solve_isotopy_from_end(renamed(a.truncated(1), "A_1"), homotopy_a(), n1, "PA");
  const auto prod = tensor_isotopy_with_commutative(pa, b, n2, "PC");
  const auto a0 = renamed(pa.at(0), "A0");
  const auto b1 = renamed(b.truncated(1), "B_1");
  const auto c0 = renamed(prod.pc.at(0), "C0");
  const auto c1 = renamed(prod.pc.at(1), "C_1");
  for (const auto& alg : {a0, renamed(a.truncated(1), "A_1"), renamed(a.truncated(2), "A_2"), b1,
                          renamed(b.truncated(2), "B_2"), c0, c1, renamed(c.truncated(2), "C_2")})
    push(d, "algebras", algebra_to_json(alg));
  push(d, "isotopies", isotopy_to_json(pa.with_endpoints(a0, renamed(a.truncated(1), "A_1"))));
  push(d, "isotopies", isotopy_to_json(Pseudoisotopy::constant(b1, n2, "PB")));
  push(d, "isotopies", isotopy_to_json(prod.pc.with_endpoints(c0, c1)));
  push(d, "embeddings", embedding_to_json(retarget(prod.emb_a, "iota_A0", a0, c0)));
  push(d, "embeddings", embedding_to_json(retarget(prod.emb_b, "iota_B0", b1, c0)));
  push(d, "extensions", {{"name", "ext_A"}, {"isotopy", "PA"}, {"targets", {"A_2"}}});
  push(d, "extensions", {{"name", "ext_B"}, {"isotopy", "PB"}, {"targets", {"B_2"}}});
  push(d, "extensions", {{"name", "ext_C"}, {"isotopy", "PC"}, {"targets", {"C_2"}}});
  push(d, "triples", {{"name", "ABC"},
                      {"pc", "PC"},
                      {"pa", "PA"},
                      {"pb", "PB"},
                      {"emb_a", "iota_A0"},
                      {"emb_b", "iota_B0"},
                      {"n1", n1},
                      {"n2", n2},
                      {"extensions", {{"a", "ext_A"}, {"b", "ext_B"}, {"c", "ext_C"}}}});
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  const std::pair<const char*, Json (*)()> files[] = {
      {"derham_t1.spec", derham_t1},     {"derham_t2.spec", derham_t2}, {"derham_pair.spec", derham_pair},
      {"gapped_pair.spec", gapped_pair}, {"isotopy.spec", isotopy},     {"commuting_isotopy.spec", commuting_isotopy},
  };
  for (const auto& [name, make] : files) {
    const Json d = make();
    parse_spec(d);  // refuse to write anything that does not load
    std::ofstream out(dir / name, std::ios::binary);
    out << d.dump(1) << "\n";
    std::cout << "wrote " << (dir / name).string() << "\n";
  }
}
