#include "curvedhh/category_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "curvedhh/constructions.hpp"
#include "curvedhh/errors.hpp"

namespace curvedhh {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& t, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  return v;
}

}  // namespace

CategoryDocument parse_category(std::string_view text, bool validate) {
  CategoryDocument doc;
  auto& c = doc.category;
  bool saw_format = false, saw_field = false;
  std::set<std::pair<std::vector<int>, int>> seen_terms;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos && line.substr(0, hash).find_first_not_of(" \t") == std::string_view::npos) {
      auto note = line.substr(hash + 1);
      if (!note.empty() && note.front() == ' ') note.remove_prefix(1);
      if (!note.empty()) doc.notes.emplace_back(note);
    }
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto& kw = toks[0].text;
    auto need = [&](std::size_t n) {
      if (toks.size() != n)
        throw ParseError(line_no, toks.back().column, "'" + std::string(kw) + "' takes " + std::to_string(n - 1) +
                                                          " argument(s), found " + std::to_string(toks.size() - 1));
    };
    auto object = [&](const Token& t) {
      auto o = c.find_object(t.text);
      if (!o) throw SemanticError(line_no, "unknown object '" + std::string(t.text) + "'");
      return *o;
    };
    auto gen = [&](const Token& t) {
      auto g = c.find_generator(t.text);
      if (!g) throw SemanticError(line_no, "unknown generator '" + std::string(t.text) + "'");
      return *g;
    };
    if (!saw_format && kw != "format")
      throw ParseError(line_no, toks[0].column, "the first record must be 'format 1'");
    try {
      if (kw == "format") {
        need(2);
        if (saw_format) throw SemanticError(line_no, "duplicate format record");
        if (toks[1].text != "1") throw ParseError(line_no, toks[1].column, "unsupported format version");
        saw_format = true;
      } else if (kw == "name") {
        if (toks.size() < 2) throw ParseError(line_no, toks[0].column, "'name' needs a value");
        const auto start = static_cast<std::size_t>(toks[1].column - 1);
        auto rest = line.substr(start);
        if (auto h = rest.find('#'); h != std::string_view::npos) rest = rest.substr(0, h);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t' || rest.back() == '\r')) rest.remove_suffix(1);
        c.set_name(std::string(rest));
      } else if (kw == "field") {
        need(2);
        if (saw_field) throw SemanticError(line_no, "duplicate field record");
        if (c.object_count()) throw SemanticError(line_no, "'field' must precede the objects");
        try {
          c.set_field(Field::parse(toks[1].text));
        } catch (const ConfigurationError& e) {
          throw ParseError(line_no, toks[1].column, e.what());
        }
        saw_field = true;
      } else if (kw == "dimension") {
        need(2);
        doc.dimension = parse_int(toks[1], line_no);
        doc.has_dimension = true;
      } else if (kw == "object") {
        need(2);
        if (c.find_object(toks[1].text)) throw SemanticError(line_no, "duplicate object '" + std::string(toks[1].text) + "'");
        c.add_object(std::string(toks[1].text));
      } else if (kw == "gen") {
        need(5);
        if (c.find_generator(toks[1].text))
          throw SemanticError(line_no, "duplicate generator '" + std::string(toks[1].text) + "'");
        c.add_generator(std::string(toks[1].text), object(toks[2]), object(toks[3]), parse_int(toks[4], line_no));
      } else if (kw == "unit") {
        need(3);
        c.set_unit(object(toks[1]), gen(toks[2]));
      } else if (kw == "mu") {
        if (toks.size() < 5) throw ParseError(line_no, toks[0].column, "malformed 'mu' record");
        const int n = parse_int(toks[1], line_no);
        if (n < 1) throw ParseError(line_no, toks[1].column, "arity must be positive");
        if (toks.size() != static_cast<std::size_t>(n) + 5)
          throw ParseError(line_no, toks[0].column,
                           "'mu " + std::to_string(n) + "' needs " + std::to_string(n) + " inputs, '->', output, coefficient");
        const auto& arrow = toks[static_cast<std::size_t>(n) + 2];
        if (arrow.text != "->") throw ParseError(line_no, arrow.column, "expected '->'");
        std::vector<int> inputs;
        for (int i = 0; i < n; ++i) inputs.push_back(gen(toks[static_cast<std::size_t>(i) + 2]));
        const int out = gen(toks[static_cast<std::size_t>(n) + 3]);
        const auto& lit = toks[static_cast<std::size_t>(n) + 4];
        mpq_class coeff;
        try {
          coeff = parse_rational_literal(lit.text);
          (void)Scalar(c.field(), coeff);
        } catch (const ConfigurationError& e) {
          throw ParseError(line_no, lit.column, e.what());
        }
        if (!seen_terms.insert({inputs, out}).second)
          throw SemanticError(line_no, "duplicate term mu" + describe_tuple(c, inputs) + " -> " + c.generator(out).name);
        c.add_product(inputs, out, coeff);
      } else {
        throw ParseError(line_no, toks[0].column, "unknown record '" + std::string(kw) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const SemanticError&) {
      throw;
    } catch (const Error& e) {
      throw SemanticError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (!saw_format) throw ParseError(1, 1, "missing 'format 1' record");
  if (!c.is_unital()) {
    for (int o = 0; o < c.object_count(); ++o)
      if (!c.unit(o)) throw SemanticError(line_no, "object '" + c.objects()[static_cast<std::size_t>(o)] + "' has no unit");
  }
  if (validate) validate_ainfty(c);
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
  return ss.str();
}

CategoryDocument read_category(const std::filesystem::path& path, bool validate) {
  return parse_category(read_file(path), validate);
}

std::string write_category(const CategoryDocument& doc) {
  const auto& c = doc.category;
  std::ostringstream os;
  for (const auto& n : doc.notes) os << "# " << n << '\n';
  os << "format 1\n";
  if (!c.name().empty()) os << "name " << c.name() << '\n';
  os << "field " << (c.field().is_rational() ? std::string("Q") : std::to_string(c.field().modulus())) << '\n';
  if (doc.has_dimension) os << "dimension " << doc.dimension << '\n';
  for (const auto& o : c.objects()) os << "object " << o << '\n';
  for (const auto& g : c.generators())
    os << "gen " << g.name << ' ' << c.objects()[static_cast<std::size_t>(g.source)] << ' '
       << c.objects()[static_cast<std::size_t>(g.target)] << ' ' << g.degree << '\n';
  for (int o = 0; o < c.object_count(); ++o)
    if (auto u = c.unit(o)) os << "unit " << c.objects()[static_cast<std::size_t>(o)] << ' ' << c.generator(*u).name << '\n';
  for (const auto& [inputs, out] : c.sorted_products())
    for (const auto& t : out) {
      os << "mu " << inputs.size();
      for (int g : inputs) os << ' ' << c.generator(g).name;
      os << " -> " << c.generator(t.gen).name << ' ' << t.coeff.get_str() << '\n';
    }
  return os.str();
}

void save_category(const std::filesystem::path& path, const CategoryDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << write_category(doc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

bool same_category(const AInftyCategory& x, const AInftyCategory& y) {
  if (!(x.field() == y.field()) || x.objects() != y.objects() || x.generator_count() != y.generator_count()) return false;
  for (int g = 0; g < x.generator_count(); ++g) {
    const auto& a = x.generator(g);
    const auto& b = y.generator(g);
    if (a.name != b.name || a.source != b.source || a.target != b.target || a.degree != b.degree) return false;
    if (x.is_unit(g) != y.is_unit(g)) return false;
  }
  const auto px = x.sorted_products(), py = y.sorted_products();
  if (px.size() != py.size()) return false;
  for (std::size_t i = 0; i < px.size(); ++i) {
    if (px[i].first != py[i].first || px[i].second.size() != py[i].second.size()) return false;
    for (std::size_t k = 0; k < px[i].second.size(); ++k)
      if (px[i].second[k].gen != py[i].second[k].gen || px[i].second[k].coeff != py[i].second[k].coeff) return false;
  }
  return true;
}

ExamplePair pair_from_document(const CategoryDocument& doc) {
  ExamplePair out;
  auto b = std::make_shared<AInftyCategory>(doc.category);
  auto a = std::make_shared<AInftyCategory>(directed_subcategory(*b));
  a->set_name(b->name());
  out.name = b->name();
  out.a = std::move(a);
  out.b = std::move(b);
  out.dimension = doc.dimension;
  out.notes = doc.notes;
  return out;
}

CategoryDocument document_from_pair(const ExamplePair& pair) {
  CategoryDocument doc;
  doc.category = *pair.b;
  if (doc.category.name().empty()) doc.category.set_name(pair.name);
  doc.dimension = pair.dimension;
  doc.has_dimension = true;
  doc.notes = pair.notes;
  return doc;
}

}  // namespace curvedhh
