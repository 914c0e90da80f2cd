#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "curvedhh/bar.hpp"
#include "curvedhh/category_io.hpp"
#include "curvedhh/cyclic.hpp"
#include "curvedhh/errors.hpp"
#include "curvedhh/examples.hpp"
#include "curvedhh/report.hpp"

using namespace curvedhh;

namespace {

struct Input {
  std::string path;
  std::string bytes;
  CategoryDocument doc;
  ExamplePair pair;
  Field field = Field::rationals();
};

Input load(const std::string& path, const std::string& field_override) {
  Input in;
  in.path = path;
  in.bytes = read_file(path);
  in.doc = parse_category(in.bytes);
  in.pair = pair_from_document(in.doc);
  in.field = field_override.empty() ? in.doc.category.field() : Field::parse(field_override);
  return in;
}

BettiReport report(const Input& in, std::string kind, std::map<int, BettiRow> rows) {
  BettiReport r;
  r.kind = std::move(kind);
  r.field = in.field.name();
  r.input_hash = fnv1a_hex(in.bytes);
  r.rows = std::move(rows);
  return r;
}

void emit(const BettiReport& r, const std::string& csv, std::string_view label = "p") {
  std::cout << to_text(r, label);
  if (csv.empty()) return;
  std::ofstream out(csv, std::ios::binary);
  if (!out) throw IoError("cannot write '" + csv + "'");
  out << to_csv(r.rows);
  if (!out) throw IoError("cannot write '" + csv + "'");
}

void require_pmax(int pmax) {
  if (pmax < 0) throw ConfigurationError("--pmax must be non-negative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated Hochschild, bar and Connes complexes of the curved category built from A inside B"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string file, field, csv, out_path, example;
  int pmax = 0, m = 2, d = 2;
  bool check_insert = false, check_serre = false;
  std::optional<int> donaldson_d;

  auto* validate = app.add_subcommand("validate", "Parse a category file and run every validator");
  validate->add_option("file", file)->required();

  auto with_table = [&](CLI::App* sub) {
    sub->add_option("file", file)->required();
    sub->add_option("--pmax", pmax, "Largest t-weight kept")->required();
    sub->add_option("--field", field, "Q or a prime; defaults to the file's field");
    sub->add_option("--csv", csv, "Also write the table as CSV");
  };
  auto* hh = app.add_subcommand("hochschild", "Betti rows of the truncated reduced cyclic bar complex");
  with_table(hh);
  auto* e1 = app.add_subcommand("e1", "E1 and E2 of the weight spectral sequence");
  with_table(e1);
  auto* bar = app.add_subcommand("bar", "Betti rows of the truncated reduced bar complex");
  with_table(bar);
  bar->add_flag("--check-insert-a", check_insert, "Check that the insert-a cone is acyclic");
  bar->add_flag("--check-serre-step", check_serre, "Compare weight <= 1 bar homology with the one-q complex");
  auto* connes = app.add_subcommand("connes", "Betti numbers of the reduced Connes complex per weight");
  with_table(connes);

  auto* don = app.add_subcommand("donaldson", "Betti numbers of the Donaldson complex");
  don->add_option("file", file)->required();
  don->add_option("--d", donaldson_d, "Shift; defaults to the file's dimension record");
  don->add_option("--field", field);
  don->add_option("--csv", csv);

  auto* gen = app.add_subcommand("gen", "Write a bundled example as a category file");
  gen->add_option("name", example)->required()->check(CLI::IsMember(example_names()));
  gen->add_option("--m", m, "Number of objects / vanishing cycles");
  gen->add_option("--d", d, "Dimension parameter");
  gen->add_option("--field", field);
  gen->add_option("-o,--output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[E_USAGE]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      const auto in = load(file, "");
      const auto& b = *in.pair.b;
      const CurvedCategory dc(in.pair.a, in.pair.b, 1);
      const auto rep = check_ainfty(b);
      (void)hochschild_complex(dc, 1, in.field);
      (void)bar_complex(dc, 1, in.field);
      std::cout << "ok: " << (b.name().empty() ? in.path : b.name()) << ", " << b.object_count() << " objects, "
                << b.generator_count() << " generators, " << rep.tuples_checked << " tuples checked up to arity "
                << rep.max_arity_checked << "\n";
      return 0;
    }
    if (*gen) {
      const Field f = field.empty() ? Field::rationals() : Field::parse(field);
      save_category(out_path, document_from_pair(generate_example(example, m, d, f)));
      return 0;
    }
    if (*don) {
      const auto in = load(file, field);
      const int shift = donaldson_d.value_or(in.doc.dimension);
      if (!donaldson_d && !in.doc.has_dimension)
        throw ConfigurationError("no --d given and the file has no dimension record");
      auto r = report(in, "donaldson d=" + std::to_string(shift), {{0, donaldson_betti(*in.pair.a, *in.pair.b, shift, in.field)}});
      emit(r, csv, "row");
      return 0;
    }
    require_pmax(pmax);
    const auto in = load(file, field);
    const CurvedCategory dc(in.pair.a, in.pair.b, pmax);
    if (*hh) {
      emit(report(in, "hochschild", hochschild_betti_table(dc, pmax, in.field)), csv);
    } else if (*e1) {
      const auto page = e1_page(dc, pmax, in.field);
      emit(report(in, "E1 (rows are weights)", page.e1), csv, "w");
      std::cout << "d1 ranks (weight, homological degree -> rank):\n";
      for (const auto& [key, r] : page.d1_rank)
        if (r) std::cout << "  (" << key.first << ", " << key.second << ") -> " << r << "\n";
      std::cout << to_text(report(in, "E2 (weights whose d1 is complete)", page.e2), "w");
    } else if (*bar) {
      emit(report(in, "bar", bar_betti_table(dc, pmax, in.field)), csv);
      bool failed = false;
      if (check_insert) {
        const auto r = insert_a_subcomplex_check(dc, in.field);
        std::cout << "insert-a cone: " << (r.closed && r.acyclic ? "acyclic" : r.message) << "\n";
        failed |= !(r.closed && r.acyclic);
      }
      if (check_serre) {
        const auto r = compare_serre_step(dc, in.field);
        std::cout << "one-q step complex: " << (r.match ? "matches" : r.message) << "\n";
        failed |= !r.match;
      }
      if (failed) {
        std::cerr << "error[E_VALIDATION]: structural check failed\n";
        return 1;
      }
    } else if (*connes) {
      const auto r = connes_betti(dc, pmax, in.field);
      if (r.warning) std::cerr << "warning: " << *r.warning << "\n";
      emit(report(in, "connes (rows are weights)", r.betti), csv, "w");
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "error[" << e.code() << "]: " << file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return exit_status(e);
  } catch (const SemanticError& e) {
    std::cerr << "error[" << e.code() << "]: " << file << ":" << e.line() << ": " << e.what() << "\n";
    return exit_status(e);
  } catch (const Error& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return exit_status(e);
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << "\n";
    return 3;
  }
}
