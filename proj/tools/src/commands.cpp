#include "ptlattice_cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "ptlattice/classify.hpp"
#include "ptlattice_cli/quiver_file.hpp"
#include "ptlattice_cli/report.hpp"

namespace ptl::cli {

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::BandPresent:
    case Errc::DimBoundReached:
    case Errc::SearchBudgetExceeded:
    case Errc::EndResidueTooLarge:
    case Errc::EndTooLarge:
    case Errc::IsoUndecided:
    case Errc::SubmoduleEnumerationTooLarge:
      return kExitInfinite;
    case Errc::InvariantBreach:
    case Errc::ClosureNotIdempotent:
    case Errc::PreorderNotAntisymmetric:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

namespace {

struct CommonArgs {
  std::string file;
  std::string json_path;
  std::optional<std::string> field;
  std::optional<int> prime;
  std::optional<std::size_t> dim_bound;
};

struct Loaded {
  QuiverFile file;
  AlgebraPtr algebra;
  CatalogOptions options;
};

Loaded load(const CommonArgs& args) {
  Loaded l{load_quiver_file(args.file), nullptr, {}};
  l.algebra = l.file.algebra();
  const std::string field = args.field.value_or(l.file.options.field);
  const int prime = args.prime.value_or(l.file.options.prime);
  if (field != "q" && field != "gf") throw Error(Errc::InvalidField, "field must be q or gf");
  l.options.field = field == "q" ? Field::rationals() : Field::prime(prime);
  l.options.prime = prime;
  l.options.dim_bound = args.dim_bound.value_or(l.file.options.dim_bound);
  Field::prime(prime);  // validates the prime
  return l;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, path + ": cannot write file");
  f << text;
}

// With --json -, JSON replaces the text report on stdout; with_text = false drops the text report.
void emit(const CommonArgs& args, const Json& j, const std::string& text, std::ostream& out, bool with_text = true) {
  if (args.json_path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  if (with_text) out << text;
  if (!args.json_path.empty()) write_file(args.json_path, j.dump(2) + "\n");
}

void add_common(CLI::App* cmd, CommonArgs& args, bool catalog_options) {
  cmd->add_option("file", args.file, "quiver file")->required();
  cmd->add_option("--json", args.json_path, "write the JSON report to PATH (- for stdout)");
  if (catalog_options) {
    cmd->add_option("--field", args.field, "q (rationals) or gf (GF(prime))")->check(CLI::IsMember({"q", "gf"}));
    cmd->add_option("--prime", args.prime, "prime for gf and for brute force");
    cmd->add_option("--dim-bound", args.dim_bound, "per-vertex dimension bound for brute force");
  }
}

std::size_t members_total_dim(const PretorsionContext& ctx, const IndexSet& s) {
  std::size_t d = 0;
  for (std::size_t i : members_of(s)) d += ctx.module(i).total_dim();
  return d;
}

LatticeView class_view(const PretorsionContext& ctx, const std::string& kind, const FiniteLattice& l) {
  LatticeView v;
  v.kind = kind;
  v.lattice = &l;
  for (const auto& e : l.elements()) {
    std::vector<std::string> names;
    for (std::size_t i : members_of(e)) names.push_back(ctx.catalog().label(i));
    v.members.push_back(names);
    v.rank.push_back(members_total_dim(ctx, e));
    if (kind == "pretorsion") v.framed.push_back(is_extension_closed(ctx, e).closed);
    if (kind == "pretorsionfree") v.framed.push_back(is_extension_closed_free(ctx, e).closed);
  }
  return v;
}

int cmd_classify(const CommonArgs& args, std::ostream& out) {
  const QuiverFile file = load_quiver_file(args.file);
  const AlgebraPtr a = file.algebra();
  const ClassificationReport r = classify(*a);
  const Json j = classify_json(file, *a, r);
  emit(args, j, classify_text(j), out);
  return kExitOk;
}

int cmd_indecs(const CommonArgs& args, std::ostream& out) {
  const Loaded l = load(args);
  const IndecCatalog c = build_catalog(l.algebra, l.options);
  Json j = catalog_json(c);
  j["algebra"] = l.file.name;
  emit(args, j, catalog_text(j), out);
  return kExitOk;
}

int cmd_lattice(const CommonArgs& args, const std::string& kind, const std::string& dot_path, std::ostream& out) {
  if (dot_path == "-" && args.json_path == "-") {
    throw Error(Errc::ParseError, "--json - and --dot - cannot both write to stdout");
  }
  const Loaded l = load(args);
  const IndecCatalog c = build_catalog(l.algebra, l.options);
  const PretorsionContext ctx(c);
  std::optional<FiniteLattice> lattice;
  LatticeView view;
  if (kind == "pretorsion") {
    lattice = build_pretorsion_lattice(ctx);
    view = class_view(ctx, kind, *lattice);
  } else if (kind == "pretorsionfree") {
    lattice = build_pretorsionfree_lattice(ctx);
    view = class_view(ctx, kind, *lattice);
  } else if (kind == "torsion") {
    lattice = build_torsion_lattice(ctx, build_pretorsion_lattice(ctx));
    view = class_view(ctx, kind, *lattice);
  } else {
    const FiniteLattice tors = build_torsion_lattice(ctx, build_pretorsion_lattice(ctx));
    const JoinIrreducibles ji = join_irreducibles(tors);
    lattice = order_ideal_lattice(ji.poset);
    view.kind = kind;
    view.lattice = &*lattice;
    for (const auto& e : lattice->elements()) {
      std::vector<std::string> names;
      for (std::size_t k : members_of(e)) names.push_back(ji.poset.label(k));
      view.members.push_back(names);
      view.rank.push_back(e.count());
    }
  }
  Json j = lattice_json(l.file.name, view);
  j["catalog"] = catalog_json(c);
  emit(args, j, lattice_text(j), out, dot_path != "-");
  if (!dot_path.empty()) {
    const std::string dot = lattice_dot(l.file.name, view);
    if (dot_path == "-") {
      out << dot;
    } else {
      write_file(dot_path, dot);
    }
  }
  return kExitOk;
}

int cmd_theories(const CommonArgs& args, bool audit, std::ostream& out) {
  const Loaded l = load(args);
  const IndecCatalog c = build_catalog(l.algebra, l.options);
  const PretorsionContext ctx(c);
  const FiniteLattice lt = build_pretorsion_lattice(ctx);
  const FiniteLattice ltf = build_pretorsionfree_lattice(ctx);
  const auto theories = enumerate_pretorsion_theories(ctx, lt, ltf, audit);
  const Json j = theories_json(l.file.name, ctx, theories, lt.size() * ltf.size(), audit);
  emit(args, j, theories_text(j), out);
  return kExitOk;
}

const char* hint_for(Errc e) {
  switch (e) {
    case Errc::BandPresent:
      return "the algebra has a band, so it is representation-infinite; lattices are not built";
    case Errc::DimBoundReached:
      return "raise --dim-bound if the algebra is believed to be representation-finite";
    case Errc::SearchBudgetExceeded:
    case Errc::EndTooLarge:
      return "the brute-force search is too large; try a smaller --prime or --dim-bound";
    case Errc::EndResidueTooLarge:
      return "an indecomposable is not absolutely indecomposable over this field; try another --prime";
    default:
      return nullptr;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattices of pretorsion classes of bound quiver algebras", "ptlattice"};
  app.require_subcommand(1);
  CommonArgs classify_args;
  CommonArgs indecs_args;
  CommonArgs lattice_args;
  CommonArgs theories_args;
  std::string kind = "pretorsion";
  std::string dot_path;
  bool audit = false;

  auto* c1 = app.add_subcommand("classify", "string-algebra, band, distributivity and LRD criteria");
  add_common(c1, classify_args, false);
  auto* c2 = app.add_subcommand("indecs", "catalog of indecomposable modules");
  add_common(c2, indecs_args, true);
  auto* c3 = app.add_subcommand("lattice", "pretorsion, pretorsion-free, torsion or Birkhoff lattice");
  add_common(c3, lattice_args, true);
  c3->add_option("--kind", kind, "lattice kind")
      ->check(CLI::IsMember({"pretorsion", "pretorsionfree", "torsion", "birkhoff-of-tors"}));
  c3->add_option("--dot", dot_path, "write the Hasse diagram as DOT to PATH (- for stdout)");
  auto* c4 = app.add_subcommand("theories", "enumerate pretorsion theories");
  add_common(c4, theories_args, true);
  c4->add_flag("--audit", audit, "run the full definitional check on every pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*c1) return cmd_classify(classify_args, out);
    if (*c2) return cmd_indecs(indecs_args, out);
    if (*c3) return cmd_lattice(lattice_args, kind, dot_path, out);
    if (*c4) return cmd_theories(theories_args, audit, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (const char* h = hint_for(e.code())) err << "hint: " << h << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace ptl::cli
