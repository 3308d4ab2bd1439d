#include "ainf/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ainf {

std::string SpecError::format(const std::string& field, const std::string& message, int line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

namespace {

constexpr const char* kSections[] = {"algebras", "embeddings", "cochains", "isotopies",
                                     "pairs",    "extensions", "triples"};

class Reader {
 public:
  Reader(const Json& node, std::string path) : node_(node), path_(std::move(path)) {}

  const Json& node() const { return node_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const { throw SpecError(path_, message); }

  bool has(const std::string& key) const { return node_.is_object() && node_.contains(key) && !node_[key].is_null(); }
  Reader at(const std::string& key) const {
    if (!node_.is_object()) fail("expected an object");
    if (!node_.contains(key)) fail("missing field '" + key + "'");
    return {node_[key], path_ + "/" + key};
  }
  Reader at(std::size_t i) const { return {node_[i], path_ + "/" + std::to_string(i)}; }
  std::size_t size() const {
    if (!node_.is_array()) fail("expected an array");
    return node_.size();
  }
  std::string str() const {
    if (!node_.is_string()) fail("expected a string");
    return node_.get<std::string>();
  }
  long long integer() const {
    if (node_.is_number_integer()) return node_.get<long long>();
    if (node_.is_string()) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(node_.get<std::string>(), &used);
        if (used == node_.get<std::string>().size()) return v;
      } catch (const std::exception&) {
      }
    }
    fail("expected an integer");
  }
  Scalar scalar() const {
    if (node_.is_number_integer()) return Scalar(node_.get<long>());
    if (!node_.is_string()) fail("expected an exact rational string \"p/q\"");
    try {
      return parse_scalar(node_.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  TPoly poly() const {
    if (!node_.is_array()) return TPoly(scalar());
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < node_.size(); ++i) coeffs.push_back(at(i).scalar());
    return TPoly(std::move(coeffs));
  }

 private:
  const Json& node_;
  std::string path_;
};

template <class F>
auto wrap(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
}

MonoidElement read_beta(const Reader& r) {
  if (r.size() != 2) r.fail("beta must be [energy, mu]");
  MonoidElement beta{r.at(0).scalar(), static_cast<int>(r.at(1).integer())};
  if (sgn(beta.energy) < 0) r.fail("negative energy");
  return beta;
}

struct Frame {
  GradedBasis basis;
  EnergyMonoid monoid;
  std::optional<Scalar> cutoff;
  std::optional<int> unit;
};

Frame read_frame(const Reader& r) {
  Frame f;
  const auto space = r.at("space");
  std::vector<BasisElement> elems;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto e = space.at(i);
    elems.push_back({e.at("name").str(), static_cast<Degree>(e.at("degree").integer())});
  }
  f.basis = wrap(space.path(), [&] { return GradedBasis(std::move(elems)); });
  std::vector<MonoidElement> gens;
  if (r.has("monoid")) {
    const auto m = r.at("monoid");
    for (std::size_t i = 0; i < m.size(); ++i) gens.push_back(read_beta(m.at(i)));
    f.monoid = wrap(m.path(), [&] { return EnergyMonoid(std::move(gens)); });
  }
  if (r.has("cutoff")) f.cutoff = r.at("cutoff").scalar();
  if (r.has("unit")) {
    const auto u = r.at("unit");
    f.unit = wrap(u.path(), [&] { return f.basis.index_of(u.str()); });
  }
  return f;
}

template <class C, class ReadCoeff>
std::vector<StructureConstant<C>> read_ops(const Reader& r, const GradedBasis& basis, int shift, ReadCoeff read_coeff) {
  std::vector<StructureConstant<C>> out;
  if (!r.node().is_array()) r.fail("expected an array of operations");
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto op = r.at(i);
    StructureConstant<C> c;
    c.k = static_cast<int>(op.at("k").integer());
    c.beta = read_beta(op.at("beta"));
    const auto inputs = op.at("inputs");
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      const auto in = inputs.at(j);
      c.inputs.push_back(wrap(in.path(), [&] { return basis.index_of(in.str()); }));
    }
    const auto output = op.at("output");
    c.output = wrap(output.path(), [&] { return basis.index_of(output.str()); });
    c.coeff = read_coeff(op.at("coeff"));
    if (op.has("id")) c.id = op.at("id").str();
    if (c.k != static_cast<int>(c.inputs.size())) op.fail("k does not match the number of inputs");
    if (!degree_ok(basis, c.k, c.beta, c.inputs, c.output, shift))
      op.fail((c.id.empty() ? std::string("operation") : c.id) + " " + constant_label(basis, c.k, c.beta, c.inputs) +
              ": output " + basis.name(c.output) + " has the wrong degree");
    out.push_back(std::move(c));
  }
  return out;
}

template <class T>
const T& find_named(const std::vector<Named<T>>& list, const std::string& name, const char* kind) {
  for (const auto& x : list)
    if (x.name == name) return x.value;
  throw SpecError("", std::string("unknown ") + kind + " '" + name + "'");
}

std::optional<std::string> opt_str(const Reader& r, const std::string& key) {
  if (!r.has(key)) return std::nullopt;
  return r.at(key).str();
}

Json coeff_json(const TPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(format_scalar(c));
  return out;
}

template <class C, class W>
Json ops_json(const GradedBasis& basis, const std::vector<StructureConstant<C>>& ops, W write_coeff) {
  Json out = Json::array();
  for (const auto& c : ops) {
    Json inputs = Json::array();
    for (int i : c.inputs) inputs.push_back(basis.name(i));
    out.push_back({{"id", c.id},
                   {"k", c.k},
                   {"beta", beta_to_json(c.beta)},
                   {"inputs", std::move(inputs)},
                   {"output", basis.name(c.output)},
                   {"coeff", write_coeff(c.coeff)}});
  }
  return out;
}

Json frame_json(const std::string& name, const GradedBasis& basis, const EnergyMonoid& monoid,
                const std::optional<Scalar>& cutoff, const std::optional<int>& unit) {
  Json space = Json::array();
  for (const auto& e : basis.elements()) space.push_back({{"name", e.name}, {"degree", e.degree}});
  Json gens = Json::array();
  for (const auto& g : monoid.generators()) gens.push_back(beta_to_json(g));
  return {{"name", name},
          {"space", std::move(space)},
          {"monoid", std::move(gens)},
          {"cutoff", cutoff ? Json(format_scalar(*cutoff)) : Json(nullptr)},
          {"unit", unit ? Json(basis.name(*unit)) : Json(nullptr)}};
}

}  // namespace

Json beta_to_json(const MonoidElement& beta) { return Json::array({format_scalar(beta.energy), beta.mu}); }

const AInfAlgebra& SpecDocument::algebra(const std::string& name) const { return find_named(algebras, name, "algebra"); }
const Pseudoisotopy& SpecDocument::isotopy(const std::string& name) const {
  return find_named(isotopies, name, "isotopy");
}
const SubalgebraEmbedding& SpecDocument::embedding(const std::string& name) const {
  for (const auto& e : embeddings)
    if (e.name == name) return e;
  throw SpecError("", "unknown embedding '" + name + "'");
}
const CochainSpec& SpecDocument::cochain(const std::string& name) const {
  for (const auto& c : cochains)
    if (c.name == name) return c;
  throw SpecError("", "unknown cochain '" + name + "'");
}
const ExtensionSpec& SpecDocument::extension(const std::string& name) const {
  for (const auto& e : extensions)
    if (e.name == name) return e;
  throw SpecError("", "unknown extension '" + name + "'");
}

void flip_op(Json& doc, const std::string& id) {
  auto negate = [](Json& coeff) {
    auto flip_one = [](Json& x) {
      Scalar v = x.is_number_integer() ? Scalar(x.get<long>()) : parse_scalar(x.get<std::string>());
      x = format_scalar(-v);
    };
    if (coeff.is_array())
      for (auto& x : coeff) flip_one(x);
    else
      flip_one(coeff);
  };
  auto scan = [&](Json& ops, const std::string& prefix) {
    if (!ops.is_array()) return false;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      auto& op = ops[i];
      const std::string own = op.contains("id") && op["id"].is_string() ? op["id"].get<std::string>() : prefix + std::to_string(i);
      if (own == id && op.contains("coeff")) {
        negate(op["coeff"]);
        return true;
      }
    }
    return false;
  };
  if (doc.contains("algebras"))
    for (auto& a : doc["algebras"])
      if (a.contains("ops") && scan(a["ops"], a.value("name", "") + "#")) return;
  if (doc.contains("isotopies"))
    for (auto& p : doc["isotopies"]) {
      const std::string name = p.value("name", "");
      if (p.contains("m") && scan(p["m"], name + ".m#")) return;
      if (p.contains("c") && scan(p["c"], name + ".c#")) return;
    }
  throw SpecError("--mutate", "no operation with id '" + id + "'");
}

SpecDocument parse_spec(const Json& doc) {
  const Reader root(doc, "");
  if (!doc.is_object()) root.fail("a spec document must be a JSON object");
  if (!root.has("version")) root.fail("missing field 'version'");
  if (root.at("version").str() != kSpecVersion)
    root.at("version").fail("unsupported version (expected \"" + std::string(kSpecVersion) + "\")");
  for (const auto& [key, value] : doc.items()) {
    if (key == "version" || key == "description") continue;
    if (std::find(std::begin(kSections), std::end(kSections), key) == std::end(kSections))
      root.fail("unknown section '" + key + "'");
  }

  SpecDocument out;
  std::set<std::string> names;
  auto claim = [&](const Reader& r) {
    auto name = r.at("name").str();
    if (name.empty() || !names.insert(name).second) r.at("name").fail("duplicate or empty name '" + name + "'");
    return name;
  };

  if (root.has("algebras")) {
    const auto list = root.at("algebras");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      const auto name = claim(r);
      auto f = read_frame(r);
      auto ops = read_ops<Scalar>(r.at("ops"), f.basis, 2, [](const Reader& c) { return c.scalar(); });
      out.algebras.push_back({name, wrap(r.path(), [&] {
                                return AInfAlgebra(name, f.basis, f.monoid, f.cutoff, f.unit, std::move(ops));
                              })});
    }
  }

  if (root.has("embeddings")) {
    const auto list = root.at("embeddings");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      const auto name = claim(r);
      const auto& source = wrap(r.at("source").path(), [&] { return &out.algebra(r.at("source").str()); });
      const auto& target = wrap(r.at("target").path(), [&] { return &out.algebra(r.at("target").str()); });
      std::vector<Combination<Scalar>> images(source->dim());
      const auto img = r.at("images");
      if (!img.node().is_object()) img.fail("expected an object mapping source elements to images");
      for (const auto& [src, image] : img.node().items()) {
        const Reader ir(image, img.path() + "/" + src);
        const int s = wrap(ir.path(), [&] { return source->basis().index_of(src); });
        if (!image.is_object()) ir.fail("expected an object mapping target elements to coefficients");
        for (const auto& [tgt, coeff] : image.items()) {
          const Reader cr(coeff, ir.path() + "/" + tgt);
          const int t = wrap(cr.path(), [&] { return target->basis().index_of(tgt); });
          const Scalar v = cr.scalar();
          if (!is_zero(v)) images[s].push_back({t, v});
        }
        std::sort(images[s].begin(), images[s].end(), [](const auto& a, const auto& b) { return a.index < b.index; });
      }
      SubalgebraEmbedding emb{name, *source, *target, std::move(images)};
      wrap(r.path(), [&] {
        emb.validate();
        return 0;
      });
      out.embeddings.push_back(std::move(emb));
    }
  }

  if (root.has("cochains")) {
    const auto list = root.at("cochains");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      CochainSpec c{claim(r), r.at("algebra").str(), AlgElement{}};
      const auto& alg = *wrap(r.at("algebra").path(), [&] { return &out.algebra(c.algebra); });
      c.element = AlgElement(alg.cutoff());
      const auto terms = r.at("terms");
      for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto t = terms.at(j);
        const auto el = t.at("element");
        const int idx = wrap(el.path(), [&] { return alg.basis().index_of(el.str()); });
        const Scalar energy = t.at("energy").scalar();
        if (sgn(energy) < 0) t.at("energy").fail("negative energy");
        c.element.add(idx, t.at("coeff").scalar(), energy);
      }
      out.cochains.push_back(std::move(c));
    }
  }

  if (root.has("isotopies")) {
    const auto list = root.at("isotopies");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      const auto name = claim(r);
      Frame f;
      if (r.has("like")) {
        const auto& like = *wrap(r.at("like").path(), [&] { return &out.algebra(r.at("like").str()); });
        f = {like.basis(), like.monoid(), like.cutoff(), like.unit()};
        if (r.has("cutoff")) f.cutoff = r.at("cutoff").scalar();
      } else {
        f = read_frame(r);
      }
      const int parity = static_cast<int>(r.at("parity").integer());
      auto read_poly = [](const Reader& c) { return c.poly(); };
      auto m = read_ops<TPoly>(r.at("m"), f.basis, 2, read_poly);
      std::vector<IsoConstant> c;
      if (r.has("c")) c = read_ops<TPoly>(r.at("c"), f.basis, 1, read_poly);
      auto p = wrap(r.path(), [&] {
        return Pseudoisotopy(name, f.basis, f.monoid, f.cutoff, f.unit, parity, std::move(m), std::move(c));
      });
      if (r.has("start") || r.has("end")) {
        const auto s = r.at("start");
        const auto e = r.at("end");
        const auto& a0 = *wrap(s.path(), [&] { return &out.algebra(s.str()); });
        const auto& a1 = *wrap(e.path(), [&] { return &out.algebra(e.str()); });
        p = p.with_endpoints(a0, a1);
      }
      out.isotopies.push_back({name, std::move(p)});
    }
  }

  if (root.has("pairs")) {
    const auto list = root.at("pairs");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      PairSpec p{claim(r), r.at("emb_a").str(), r.at("emb_b").str(), opt_str(r, "b1"), opt_str(r, "b2")};
      wrap(r.path(), [&] {
        const auto& ea = out.embedding(p.emb_a);
        const auto& eb = out.embedding(p.emb_b);
        if (p.b1 && out.cochain(*p.b1).algebra != ea.source.name())
          throw std::invalid_argument("cochain " + *p.b1 + " does not live on " + ea.source.name());
        if (p.b2 && out.cochain(*p.b2).algebra != eb.source.name())
          throw std::invalid_argument("cochain " + *p.b2 + " does not live on " + eb.source.name());
        return 0;
      });
      out.pairs.push_back(std::move(p));
    }
  }

  if (root.has("extensions")) {
    const auto list = root.at("extensions");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      ExtensionSpec e{claim(r), r.at("isotopy").str(), {}, {}};
      const auto& p = *wrap(r.at("isotopy").path(), [&] { return &out.isotopy(e.isotopy); });
      if (r.has("start")) {
        e.start = r.at("start").str();
      } else if (p.start()) {
        e.start = p.start()->name();
      } else {
        r.fail("missing field 'start' and the isotopy has no start algebra");
      }
      wrap(r.path(), [&] { return &out.algebra(e.start); });
      const auto targets = r.at("targets");
      for (std::size_t j = 0; j < targets.size(); ++j) {
        e.targets.push_back(targets.at(j).str());
        wrap(targets.at(j).path(), [&] { return &out.algebra(e.targets.back()); });
      }
      if (e.targets.empty()) targets.fail("at least one target is required");
      out.extensions.push_back(std::move(e));
    }
  }

  if (root.has("triples")) {
    const auto list = root.at("triples");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto r = list.at(i);
      TripleSpec t{claim(r),
                   r.at("pc").str(),
                   r.at("pa").str(),
                   r.at("pb").str(),
                   r.at("emb_a").str(),
                   r.at("emb_b").str(),
                   static_cast<int>(r.at("n1").integer()),
                   static_cast<int>(r.at("n2").integer()),
                   {},
                   {},
                   {}};
      if (r.has("extensions")) {
        const auto e = r.at("extensions");
        t.ext_a = e.at("a").str();
        t.ext_b = e.at("b").str();
        t.ext_c = e.at("c").str();
      }
      wrap(r.path(), [&] {
        out.isotopy(t.pc), out.isotopy(t.pa), out.isotopy(t.pb);
        out.embedding(t.emb_a), out.embedding(t.emb_b);
        for (const auto* e : {&t.ext_a, &t.ext_b, &t.ext_c})
          if (*e) out.extension(**e);
        return 0;
      });
      out.triples.push_back(std::move(t));
    }
  }
  return out;
}

Json read_spec_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(end), '\n'));
    throw SpecError(path, std::string("malformed JSON: ") + e.what(), line);
  }
}

SpecDocument parse_spec_file(const std::string& path) { return parse_spec(read_spec_json(path)); }

Json merge_spec_json(const std::vector<Json>& docs) {
  Json out = {{"version", kSpecVersion}};
  for (const auto& d : docs) {
    if (!d.is_object()) throw SpecError("", "a spec document must be a JSON object");
    if (d.contains("version") && d["version"] != kSpecVersion)
      throw SpecError("/version", "unsupported version (expected \"" + std::string(kSpecVersion) + "\")");
    for (const auto& [key, value] : d.items()) {
      if (key == "version") continue;
      if (key == "description") continue;
      if (!value.is_array()) throw SpecError("/" + key, "expected an array");
      auto& dst = out[key];
      if (dst.is_null()) dst = Json::array();
      for (const auto& x : value) dst.push_back(x);
    }
  }
  return out;
}

Json algebra_to_json(const AInfAlgebra& alg) {
  Json out = frame_json(alg.name(), alg.basis(), alg.monoid(), alg.cutoff(), alg.unit());
  out["ops"] = ops_json(alg.basis(), alg.constants(), [](const Scalar& c) { return format_scalar(c); });
  return out;
}

Json embedding_to_json(const SubalgebraEmbedding& emb) {
  Json images = Json::object();
  for (int s = 0; s < emb.source.dim(); ++s) {
    Json img = Json::object();
    for (const auto& t : emb.images[s]) img[emb.target.basis().name(t.index)] = format_scalar(t.coeff);
    images[emb.source.basis().name(s)] = std::move(img);
  }
  return {{"name", emb.name}, {"source", emb.source.name()}, {"target", emb.target.name()}, {"images", images}};
}

Json cochain_to_json(const std::string& name, const std::string& algebra, const AlgElement& b,
                     const GradedBasis& basis) {
  Json terms = Json::array();
  for (const auto& [idx, coeff] : b.coeffs())
    for (const auto& [energy, c] : coeff.terms())
      terms.push_back({{"element", basis.name(idx)}, {"coeff", format_scalar(c)}, {"energy", format_scalar(energy)}});
  return {{"name", name}, {"algebra", algebra}, {"terms", std::move(terms)}};
}

Json isotopy_to_json(const Pseudoisotopy& p) {
  Json out = frame_json(p.name(), p.basis(), p.monoid(), p.cutoff(), p.unit());
  out["parity"] = p.parity();
  out["m"] = ops_json(p.basis(), p.m_constants(), coeff_json);
  out["c"] = ops_json(p.basis(), p.c_constants(), coeff_json);
  if (p.start()) out["start"] = p.start()->name();
  if (p.end()) out["end"] = p.end()->name();
  return out;
}

}  // namespace ainf
