#pragma once

// JSON documents for presentations, structure tables, coactions and product
// tables, and a name resolver over the compiled-in catalog plus files.

#include "braidkit/ansatz.hpp"
#include "braidkit/catalog.hpp"
#include "braidkit/coaction.hpp"
#include "braidkit/presentations.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace braidkit {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coaction as text. `adjoint_of` names the plain structure whose adjoint
/// formula defines β on words; empty for a table extended multiplicatively.
struct CoactionText {
  std::string name;
  std::string coacted;
  std::string coacting;
  std::string adjoint_of;
  std::map<std::string, std::string> coaction;
};

/// Product table as text: "x@y" -> x∘y over `host`, for generators of `target`.
struct ProductTableText {
  std::string name;
  std::string host;
  std::string target;
  std::map<std::string, std::string> product_table;
};

// Every document carries format_version and kind ("presentation",
// "structure", "coaction", "product_table"). Field order is fixed, so
// to_json(from_json(j)) reproduces j when j was written by to_json.
Json to_json(const PresentationSpec& p);
Json to_json(const StructureTable& t);
Json to_json(const CoactionText& c);
Json to_json(const ProductTableText& t);

PresentationSpec presentation_from_json(const Json& j);
StructureTable structure_from_json(const Json& j);
CoactionText coaction_from_json(const Json& j);
ProductTableText product_table_from_json(const Json& j);

/// "presentation", "structure", ...; throws FormatError on a missing or
/// unsupported format_version.
std::string document_kind(const Json& j);

CoactionText to_text(const CoactionMap& beta, const std::string& adjoint_of = {});
ProductTableText to_text(const MultiplicationTable& t, const std::string& target);

/// Serialized form written to disk: two-space indent, trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct CatalogEntry {
  std::string name;
  std::string kind;
  /// "builtin" or the file path.
  std::string origin;
};

/// Resolves names against the compiled-in catalog first, then against JSON
/// files in the search directories (`<dir>/<name>.json`), then as a path.
/// Presentation names are case-insensitive for builtins and may carry
/// bindings after a bar: "TQR|r=q".
class Library {
 public:
  explicit Library(std::vector<std::filesystem::path> search_dirs = {});

  PresentationPtr presentation(const std::string& name) const;
  StructurePtr structure(const std::string& name) const;
  CoactionMap coaction(const std::string& name) const;
  MultiplicationTable table(const std::string& name) const;

  /// Kind of the named object, or empty if unknown.
  std::string kind_of(const std::string& name) const;
  /// Builtins first, then files in directory order, sorted by path per
  /// directory; a name already listed is skipped.
  std::vector<CatalogEntry> list() const;

  /// Documents for builtin objects.
  static Json builtin_document(const std::string& name);
  static std::vector<std::string> builtin_names();

 private:
  std::optional<Json> find_file(const std::string& name) const;
  Json load_kind(const std::string& name, const std::string& kind) const;

  std::vector<std::filesystem::path> dirs_;
};

// Report pieces.
Json to_json(const CheckReport& r);
Json to_json(const ConfluenceReport& r, const Presentation& p);
Json to_json(const SolutionBranch& b);

}  // namespace braidkit
