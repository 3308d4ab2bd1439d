#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainf/algebra.hpp"
#include "ainf/kunneth.hpp"
#include "ainf/pseudoisotopy.hpp"
#include "ainf/report.hpp"

namespace ainf {

inline constexpr const char* kSpecVersion = "ainfctl/1";

/// Parse or validation error located by JSON pointer (and line for syntax errors).
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string field, const std::string& message, int line = 0)
      : std::runtime_error(format(field, message, line)), field_(std::move(field)), line_(line) {}
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& field, const std::string& message, int line);
  std::string field_;
  int line_;
};

struct CochainSpec {
  std::string name;
  std::string algebra;
  AlgElement element;
};

/// Two embeddings into a common target, with optional cochains on the factors.
struct PairSpec {
  std::string name;
  std::string emb_a;
  std::string emb_b;
  std::optional<std::string> b1;
  std::optional<std::string> b2;
};

struct ExtensionSpec {
  std::string name;
  std::string isotopy;
  std::string start;
  std::vector<std::string> targets;
};

/// Isotopies on both factors and the target of a commuting pair; optionally the
/// names of extensions of each, to be re-checked as a commuting pair.
struct TripleSpec {
  std::string name;
  std::string pc;
  std::string pa;
  std::string pb;
  std::string emb_a;
  std::string emb_b;
  int n1 = 0;
  int n2 = 0;
  std::optional<std::string> ext_a;
  std::optional<std::string> ext_b;
  std::optional<std::string> ext_c;
};

template <class T>
struct Named {
  std::string name;
  T value;
};

/// A validated specification document. Lists keep file order.
struct SpecDocument {
  std::vector<Named<AInfAlgebra>> algebras;
  std::vector<SubalgebraEmbedding> embeddings;
  std::vector<CochainSpec> cochains;
  std::vector<Named<Pseudoisotopy>> isotopies;
  std::vector<PairSpec> pairs;
  std::vector<ExtensionSpec> extensions;
  std::vector<TripleSpec> triples;

  const AInfAlgebra& algebra(const std::string& name) const;
  const SubalgebraEmbedding& embedding(const std::string& name) const;
  const CochainSpec& cochain(const std::string& name) const;
  const Pseudoisotopy& isotopy(const std::string& name) const;
  const ExtensionSpec& extension(const std::string& name) const;
};

/// Negates the coefficient of the op with the given id in the raw document
/// (algebra ops "NAME#i", isotopy ops "NAME.m#i" / "NAME.c#i", or explicit ids).
/// Throws SpecError if no op carries that id.
void flip_op(Json& doc, const std::string& id);

/// Builds and validates a document; every error names the offending field.
SpecDocument parse_spec(const Json& doc);
/// Reads a file; syntax errors carry the line number.
Json read_spec_json(const std::string& path);
SpecDocument parse_spec_file(const std::string& path);
/// Merges several files into one document (sections concatenated in order).
Json merge_spec_json(const std::vector<Json>& docs);

Json algebra_to_json(const AInfAlgebra& alg);
Json embedding_to_json(const SubalgebraEmbedding& emb);
Json cochain_to_json(const std::string& name, const std::string& algebra, const AlgElement& b, const GradedBasis& basis);
Json isotopy_to_json(const Pseudoisotopy& p);
Json beta_to_json(const MonoidElement& beta);

}  // namespace ainf
