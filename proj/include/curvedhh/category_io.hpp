#ifndef CURVEDHH_CATEGORY_IO_HPP
#define CURVEDHH_CATEGORY_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curvedhh/category.hpp"
#include "curvedhh/examples.hpp"

namespace curvedhh {

/*
 * Line-based category description (see docs/category_format.md):
 *
 *   format 1
 *   name <text>
 *   field Q | <prime>
 *   dimension <d>
 *   object <label>
 *   gen <id> <source> <target> <degree>
 *   unit <object> <id>
 *   mu <n> <in_n> ... <in_1> -> <out> <coefficient>
 *
 * '#' starts a comment.  Coefficients are exact literals.
 */
struct CategoryDocument {
  AInftyCategory category;
  int dimension = 0;
  bool has_dimension = false;
  std::vector<std::string> notes;
};

// Throws ParseError (syntax, with line/column), SemanticError (dangling ids,
// degree rule, duplicates, with line) or RelationViolation.
CategoryDocument parse_category(std::string_view text, bool validate = true);
CategoryDocument read_category(const std::filesystem::path& path, bool validate = true);

// Deterministic serialization; parse_category(write_category(d)) == d.
std::string write_category(const CategoryDocument& doc);
void save_category(const std::filesystem::path& path, const CategoryDocument& doc);

// Same objects, generators, units and structure constants.
bool same_category(const AInftyCategory& x, const AInftyCategory& y);

std::string read_file(const std::filesystem::path& path);

// The file stores B; A is its directed subcategory.
ExamplePair pair_from_document(const CategoryDocument& doc);
CategoryDocument document_from_pair(const ExamplePair& pair);

}  // namespace curvedhh

#endif  // CURVEDHH_CATEGORY_IO_HPP
