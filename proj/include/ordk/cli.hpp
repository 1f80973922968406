#pragma once

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ordk/bundle.hpp"
#include "ordk/complex.hpp"
#include "ordk/error.hpp"
#include "ordk/frames.hpp"
#include "ordk/io.hpp"
#include "ordk/ordered_group.hpp"
#include "ordk/state_space.hpp"
#include "ordk/sw_calculus.hpp"

namespace ordk::cli {

using nlohmann::json;

/// Result of one command: structured results plus a text rendering.
struct Report {
  std::string command;
  json results = json::object();
  std::vector<std::string> lines;
  std::vector<std::string> warnings;

  std::string text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    for (const auto& w : warnings) out += "warning: " + w + "\n";
    return out;
  }

  json to_json() const {
    return {{"command", command}, {"results", results}, {"warnings", warnings}};
  }
};

inline std::string approx_text(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << std::fixed << x;
  return s.str();
}

/// Exact value, with a marked decimal rendering when `approx` is set.
inline json value_json(const QuadExact& q, bool approx) {
  if (!approx) return q.str();
  return {{"exact", q.str()}, {"approx", q.approx()}};
}

inline std::string value_text(const QuadExact& q, bool approx) {
  if (!approx) return q.str();
  return q.str() + " (approx " + approx_text(q.approx()) + ")";
}

inline std::string variable_name(std::size_t i, std::size_t rank) {
  if (rank == 2) return i == 0 ? "x" : "y";
  if (rank == 3) return i == 0 ? "x" : i == 1 ? "y" : "z";
  return "x" + std::to_string(i + 1);
}

/// Human form of a functional, e.g. "x+√2·y" or "1/2·x1-x3".
/// "√2", "1-3√5", "2/3": drops zero parts and unit surd coefficients.
inline std::string format_quad(const QuadExact& c) {
  if (c.is_rational()) return to_string(c.rational_part());
  const Rational s = c.surd_part();
  const Rational mag = s < 0 ? Rational(-s) : s;
  const std::string surd = (mag == 1 ? "" : to_string(mag)) + "√" + c.radicand().str();
  if (c.rational_part() == 0) return (s < 0 ? "-" : "") + surd;
  return to_string(c.rational_part()) + (s < 0 ? "-" : "+") + surd;
}

inline std::string format_functional(const LinearFunctional& f) {
  std::string out;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    const QuadExact& c = f[i];
    if (c.is_zero()) continue;
    const std::string var = variable_name(i, f.rank());
    std::string term;
    bool negative = false;
    if (c.is_rational()) {
      Rational r = c.rational_part();
      negative = r < 0;
      if (negative) r = -r;
      term = r == 1 ? var : to_string(r) + "·" + var;
    } else if (c.rational_part() == 0) {
      Rational s = c.surd_part();
      negative = s < 0;
      if (negative) s = -s;
      const std::string root = "√" + c.radicand().str();
      term = (s == 1 ? root : to_string(s) + root) + "·" + var;
    } else {
      term = "(" + format_quad(c) + ")·" + var;
    }
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_lattice(const IntMatrix& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += to_string(rows[i]);
  }
  return out;
}

inline json lattice_json(const IntMatrix& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(io::to_json(r));
  return out;
}

inline IntVector parse_element(const std::string& text) {
  IntVector v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(parse_integer(part));
  if (v.empty()) fail(ErrorCode::Parse, "empty element '" + text + "'");
  return v;
}

inline std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    const Integer i = parse_integer(part);
    if (i < 0) fail(ErrorCode::Parse, "negative index in '" + text + "'");
    out.push_back(i.convert_to<std::size_t>());
  }
  return out;
}

inline ComplexPtr cycle_complex(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return std::make_shared<const SimplicialComplex>(make_complex(n, edges));
}

/// Kronecker-type demo: the ordered group of Z^2 cut by the line of the
/// given slope, and the twisted / untwisted families of such groups over an
/// n-gon.
inline Report demo_kronecker(const QuadExact& slope, int subdivisions, bool approx = false) {
  if (subdivisions < 3) fail(ErrorCode::Input, "the circle needs at least 3 subdivisions");
  Report r;
  r.command = "demo-kronecker";
  const Integer d = slope.is_rational() ? Integer(0) : slope.radicand();
  const LinearFunctional f({QuadExact(1), slope}, d);
  const OrderedGroup g = hyperplane_to_group(f);
  const bool total = is_totally_ordered(g);
  const bool simple = is_simple(g);
  r.results["slope"] = slope.str();
  r.results["rational"] = slope.is_rational();
  r.results["totally_ordered"] = total;
  r.results["simple"] = simple;
  if (slope.is_rational()) {
    const IntMatrix kernel = kernel_lattice(g);
    r.results["kernel"] = lattice_json(kernel);
    r.lines.push_back("slope " + format_quad(slope) + ": rational: kernel span " + format_lattice(kernel) +
                      "; not totally ordered (compact leaves)");
  } else {
    const State s = unique_state(g, {1, 0});
    r.results["unique_state"] = format_functional(s.functional());
    r.results["unique_state_functional"] = io::to_json(s.functional());
    std::string line = "slope " + format_quad(slope) + ": irrational: " + std::string(simple ? "simple, " : "") +
                       "totally ordered; unique state " + format_functional(s.functional());
    if (approx) line += " (slope approx " + approx_text(slope.approx()) + ")";
    r.lines.push_back(line + " (dense leaves)");
  }

  const ComplexPtr circle = cycle_complex(subdivisions);
  RawBundle untwisted{circle, 2, d, {}, {}};
  for (int v = 0; v < subdivisions; ++v) untwisted.vertex_normals.emplace(v, f);
  RawBundle twisted = untwisted;
  twisted.edge_signs[{0, subdivisions - 1}] = -1;  // half-turn monodromy
  const GroupBundle plain = validate_bundle(untwisted);
  const GroupBundle mobius = validate_bundle(twisted);
  const bool same = classify_pair(plain, mobius);
  const std::size_t classes = enumerate_classes(circle).size();
  r.results["subdivisions"] = subdivisions;
  r.results["untwisted_w1"] = io::to_json(*circle, w1_class(plain).representative);
  r.results["twisted_w1"] = io::to_json(*circle, w1_class(mobius).representative);
  r.results["distinct"] = !same;
  r.results["class_count"] = classes;
  r.lines.push_back("untwisted family: w1 " + std::string(w1_class(plain).is_trivial() ? "trivial" : "nontrivial"));
  r.lines.push_back("twisted family: w1 " + std::string(w1_class(mobius).is_trivial() ? "trivial" : "nontrivial"));
  r.lines.push_back(std::string(same ? "same class" : "distinct classes") + " (" + std::to_string(classes) +
                    " classes total over S¹)");
  return r;
}

namespace detail {

struct Options {
  std::string complex_file;
  std::vector<std::string> bundle_files;
  std::vector<std::string> files;
  std::optional<int> dim;
  bool json = false;
  bool approx = false;
  bool strict = false;
  std::string check = "summary";
  std::vector<std::string> elements;
  std::string unit;
  long long bound = 1;
  long long radius = 2;
  long long multiplier = 2;
  std::string subset;
  std::optional<int> rank;
  std::optional<int> sections;
  std::optional<int> nu;
  std::string slope;
  int subdivisions = 3;
};

inline ComplexPtr load_complex(const Options& o, Report& r) {
  if (o.complex_file.empty()) fail(ErrorCode::Parse, "--complex is required");
  ValidatedComplex v = io::parse_complex(io::read_json_file(o.complex_file), o.strict);
  if (v.faces_added) r.warnings.push_back("missing faces were added to the complex");
  return std::make_shared<const SimplicialComplex>(std::move(v.complex));
}

inline const std::string& single_file(const Options& o) {
  if (o.files.size() != 1) fail(ErrorCode::Parse, "expected exactly one --file");
  return o.files.front();
}

inline IntVector element_at(const Options& o, std::size_t i) {
  if (o.elements.size() <= i)
    fail(ErrorCode::Parse, "expected at least " + std::to_string(i + 1) + " --element values");
  return parse_element(o.elements[i]);
}

inline json complex_summary(const SimplicialComplex& k) {
  json counts = json::array();
  for (int p = 0; p <= k.dimension(); ++p) counts.push_back(k.count(p));
  return {{"vertices", k.vertex_count()}, {"dimension", k.dimension()}, {"simplex_counts", counts}};
}

inline Report run_cohomology(const Options& o) {
  Report r;
  r.command = "cohomology";
  const ComplexPtr k = load_complex(o, r);
  r.results["complex"] = complex_summary(*k);
  std::vector<int> dims;
  if (o.dim) {
    dims.push_back(*o.dim);
  } else {
    for (int p = 0; p <= k->dimension(); ++p) dims.push_back(p);
  }
  json groups = json::array();
  for (int p : dims) {
    const CohomologyBasis h = cohomology(*k, p);
    json reps = json::array();
    for (const auto& c : h.representatives) reps.push_back(io::to_json(*k, c));
    groups.push_back({{"dim", p}, {"rank", h.rank}, {"representatives", reps}});
    r.lines.push_back("H^" + std::to_string(p) + "(K; Z2) rank " + std::to_string(h.rank));
    for (const auto& c : h.representatives) r.lines.push_back("  generator " + io::to_json(*k, c).dump());
  }
  r.results["cohomology"] = groups;
  if (o.dim) r.results["rank"] = groups[0]["rank"];
  return r;
}

inline Report run_cup(const Options& o) {
  Report r;
  r.command = "cup";
  const ComplexPtr k = load_complex(o, r);
  if (o.files.size() != 2) fail(ErrorCode::Parse, "cup needs exactly two --file cochains");
  const Z2Cochain a = io::parse_cochain(io::read_json_file(o.files[0]), *k);
  const Z2Cochain b = io::parse_cochain(io::read_json_file(o.files[1]), *k);
  const Z2Cochain c = cup_product(*k, a, b);
  r.results["product"] = io::to_json(*k, c);
  r.lines.push_back("product " + io::to_json(*k, c).dump());
  if (is_cocycle(*k, a) && is_cocycle(*k, b)) {
    const Z2Cochain canon = canonical_form(*k, c);
    r.results["class_zero"] = canon.is_zero();
    r.results["canonical"] = io::to_json(*k, canon);
    r.lines.push_back(std::string("class ") + (canon.is_zero() ? "zero" : "nonzero") + " in H^" +
                      std::to_string(c.dim));
  } else {
    r.warnings.push_back("inputs are not both cocycles; no cohomology class reported");
  }
  return r;
}

inline Report run_group(const Options& o) {
  Report r;
  r.command = "group";
  const OrderedGroup g = io::parse_group(io::read_json_file(single_file(o)));
  r.results["group"] = io::to_json(g);
  const std::string& check = o.check;
  if (check == "summary" || check == "total") {
    const bool total = is_totally_ordered(g);
    r.results["totally_ordered"] = total;
    r.results["simple"] = is_simple(g);
    std::string line = total ? "totally ordered" : "not totally ordered";
    if (g.is_hyperplane()) {
      const IntMatrix kernel = kernel_lattice(g);
      r.results["kernel"] = lattice_json(kernel);
      if (!kernel.empty()) line += "; kernel " + format_lattice(kernel);
    }
    if (is_simple(g)) line += "; simple";
    r.lines.push_back(line);
  } else if (check == "positive") {
    const IntVector x = element_at(o, 0);
    const bool pos = is_positive(g, x);
    r.results["positive"] = pos;
    r.lines.push_back(to_string(x) + (pos ? " is positive" : " is not positive"));
  } else if (check == "compare") {
    const IntVector x = element_at(o, 0), y = element_at(o, 1);
    const Ordering ord = compare(g, x, y);
    r.results["ordering"] = to_string(ord);
    r.lines.push_back(to_string(x) + " vs " + to_string(y) + ": " + to_string(ord));
  } else if (check == "unit") {
    const IntVector u = element_at(o, 0);
    const OrderUnitCheck res = is_order_unit(g, u, o.bound);
    r.results["order_unit"] = res.is_unit;
    if (res.failing_generator) r.results["failing_generator"] = io::to_json(*res.failing_generator);
    r.lines.push_back(to_string(u) + (res.is_unit ? " is an order unit" : " is not an order unit within bound " +
                                                                                 std::to_string(o.bound)));
  } else if (check == "unperforated") {
    const IntVector x = element_at(o, 0);
    const bool ok = is_unperforated_witness(g, x, o.multiplier);
    r.results["unperforated_witness"] = ok;
    r.lines.push_back("n x >= 0 implies x >= 0 for n=" + std::to_string(o.multiplier) + ": " + (ok ? "holds" : "fails"));
  } else if (check == "riesz") {
    const auto z = riesz_interpolate(g, element_at(o, 0), element_at(o, 1), element_at(o, 2),
                                     element_at(o, 3), o.radius);
    r.results["interpolant"] = z ? io::to_json(*z) : json(nullptr);
    r.lines.push_back(z ? "interpolant " + to_string(*z)
                        : "no interpolant in the box of radius " + std::to_string(o.radius));
  } else if (check == "ideal" || check == "quotient") {
    const OrderIdeal h = order_ideal_generated(g, parse_index_list(o.subset));
    r.results["ideal"] = lattice_json(h.generators());
    r.lines.push_back("ideal generated by " + (h.rank() ? format_lattice(h.generators()) : std::string("{0}")));
    if (check == "quotient") {
      const OrderedGroup q = quotient(g, h);
      r.results["quotient"] = io::to_json(q);
      r.lines.push_back("quotient " + io::to_json(q).dump());
    }
  } else {
    fail(ErrorCode::Parse, "unknown --check '" + check + "'");
  }
  return r;
}

inline Report run_states(const Options& o) {
  Report r;
  r.command = "states";
  const OrderedGroup g = io::parse_group(io::read_json_file(single_file(o)));
  if (o.unit.empty()) fail(ErrorCode::Parse, "--unit is required");
  const IntVector u = parse_element(o.unit);
  const StateList states = extreme_states(g, u);
  const auto probes = standard_generators(g.rank());
  json list = json::array();
  for (const auto& s : states) {
    const auto image = discrete_image_generator(s, probes);
    json entry = {{"state", format_functional(s.functional())},
                  {"functional", io::to_json(s.functional())},
                  {"discrete", image.has_value()}};
    if (image) entry["image_generator"] = to_string(*image);
    if (image && g.is_simplicial()) {
      const OrderIdeal h = kernel_ideal(g, s);
      entry["kernel_ideal"] = lattice_json(h.generators());
      entry["kernel_quotient"] = io::to_json(quotient(g, h));
    }
    list.push_back(entry);
    r.lines.push_back("state " + format_functional(s.functional()) +
                      (image ? " (discrete, image " + to_string(*image) + "·Z)" : " (dense image)"));
  }
  r.results["extreme_states"] = list;
  const std::size_t dim = affine_dimension(states, probes);
  r.results["affine_dimension"] = dim;
  r.lines.push_back("affine dimension " + std::to_string(dim));
  if (g.is_hyperplane() && is_totally_ordered(g)) {
    r.results["unique_state"] = format_functional(states.front().functional());
    r.lines.push_back("unique state " + format_functional(states.front().functional()));
  }
  if (!o.elements.empty()) {
    const IntVector x = element_at(o, 0);
    json values = json::array();
    std::string line = "natural map at " + to_string(x) + ":";
    for (const auto& v : natural_map_eval(g, u, x)) {
      values.push_back(value_json(v, o.approx));
      line += " " + value_text(v, o.approx);
    }
    r.results["natural_map"] = values;
    r.lines.push_back(line);
  }
  return r;
}

inline Report run_frames(const Options& o) {
  Report r;
  r.command = "frames";
  if (o.files.empty() || o.files.size() > 2) fail(ErrorCode::Parse, "frames takes one or two --file frames");
  std::vector<Frame> frames;
  for (const auto& f : o.files) frames.push_back(io::parse_frame(io::read_json_file(f)));
  json planes = json::array();
  for (const auto& f : frames) {
    const OrientedPlane p = standard_frame(f);
    planes.push_back(io::to_json(p));
    r.lines.push_back("standard frame " + format_lattice(p.canonical_frame) + ", orientation " +
                      (p.orientation > 0 ? "+1" : "-1"));
  }
  r.results["planes"] = planes;
  if (frames.size() == 2) {
    const bool same = same_oriented_plane(frames[0], frames[1]);
    r.results["same_oriented_plane"] = same;
    r.lines.push_back(same ? "same oriented plane" : "different oriented planes");
  }
  return r;
}

inline Report run_sw(const Options& o) {
  Report r;
  r.command = "sw";
  if (o.rank) {
    const int k = *o.rank;
    if (o.sections) {
      json degrees = json::array();
      std::string line = "forced zero degrees:";
      for (int p : vanish_from_sections(k, *o.sections)) {
        degrees.push_back(p);
        line += " " + std::to_string(p);
      }
      r.results["forced_zero_degrees"] = degrees;
      r.lines.push_back(line);
      if (o.nu) {
        const CoefficientGroup tag = obstruction_coefficient_group(*o.nu, k, *o.sections);
        r.results["obstruction_coefficients"] = to_string(tag);
        r.lines.push_back("obstruction coefficients at nu=" + std::to_string(*o.nu) + ": " + to_string(tag));
        if (const auto note = obstruction_parity_note(*o.nu, k, *o.sections)) r.warnings.push_back(*note);
      }
      return r;
    }
    if (o.complex_file.empty()) fail(ErrorCode::Parse, "sw --rank needs --sections or --complex");
  }
  const ComplexPtr k = load_complex(o, r);
  if (o.files.empty() || o.files.size() > 2) fail(ErrorCode::Parse, "sw takes one or two --file total classes");
  std::vector<TotalSWClass> classes;
  for (const auto& f : o.files) classes.push_back(io::parse_total_class(io::read_json_file(f), k));
  if (classes.size() == 1) {
    const int truncation = o.dim.value_or(k->dimension());
    const TotalSWClass bar = inverse_class(classes[0], truncation);
    r.results["inverse"] = io::to_json(bar);
    r.lines.push_back("inverse " + io::to_json(bar).dump());
    const TotalSWClass check = whitney_product(classes[0], bar);
    bool unit = true;
    for (int p = 1; p <= std::min(truncation, check.top_degree()); ++p) unit = unit && check[p].is_zero();
    r.results["product_is_unit"] = unit;
  } else {
    const TotalSWClass prod = whitney_product(classes[0], classes[1]);
    r.results["product"] = io::to_json(prod);
    r.lines.push_back("product " + io::to_json(prod).dump());
  }
  return r;
}

inline GroupBundle load_bundle(const std::string& path, bool strict) {
  return io::parse_bundle(io::read_json_file(path), strict);
}

inline Report run_classify(const Options& o) {
  Report r;
  r.command = "classify";
  if (o.bundle_files.size() != 2) fail(ErrorCode::Parse, "classify needs exactly two --bundle files");
  const GroupBundle a = load_bundle(o.bundle_files[0], o.strict);
  const GroupBundle b = load_bundle(o.bundle_files[1], o.strict);
  const bool same = classify_pair(a, b);
  r.results["same_class"] = same;
  r.results["w1"] = json::array({io::to_json(a.base(), w1_class(a).representative),
                                 io::to_json(b.base(), w1_class(b).representative)});
  r.lines.push_back(same ? "same w1 class (invariant agrees)" : "distinct: w1 classes differ");
  return r;
}

inline Report run_enumerate(const Options& o) {
  Report r;
  r.command = "enumerate";
  const ComplexPtr k = load_complex(o, r);
  const int rank = o.rank.value_or(2);
  const std::vector<W1Class> classes = enumerate_classes(k);
  std::vector<QuadExact> coeffs(static_cast<std::size_t>(std::max(rank, 2)), QuadExact(0));
  coeffs[0] = 1;
  coeffs[1] = QuadExact(0, 1, 2);
  const LinearFunctional normal(coeffs, 2);
  json list = json::array();
  for (const auto& c : classes) {
    const GroupBundle b = realize_class(c, normal);
    list.push_back({{"w1", io::to_json(*k, c.representative)}, {"bundle", io::to_json(b)}});
  }
  r.results["class_count"] = classes.size();
  r.results["classes"] = list;
  r.lines.push_back(std::to_string(classes.size()) + " classes in H^1(K; Z2), each realized by a validated bundle");
  return r;
}

inline Report run_trivialize(const Options& o) {
  Report r;
  r.command = "trivialize";
  if (o.bundle_files.size() != 1) fail(ErrorCode::Parse, "trivialize needs exactly one --bundle");
  const GroupBundle e = load_bundle(o.bundle_files[0], o.strict);
  json comps = json::array();
  for (const auto& t : trivialize(e)) {
    json c = {{"vertices", t.vertices}};
    if (t.gauge) {
      c["gauge"] = *t.gauge;
      r.lines.push_back("component " + to_string(Simplex(t.vertices)) + ": trivial, gauge " +
                        to_string(Simplex(*t.gauge)));
    } else {
      c["odd_cycle"] = *t.odd_cycle;
      r.lines.push_back("component " + to_string(Simplex(t.vertices)) + ": nontrivial, odd cycle " +
                        to_string(Simplex(*t.odd_cycle)));
    }
    comps.push_back(c);
  }
  r.results["components"] = comps;
  return r;
}

inline Report run_demo(const Options& o) {
  if (o.slope.empty()) fail(ErrorCode::Parse, "--slope is required");
  return demo_kronecker(parse_quad(o.slope), o.subdivisions, o.approx);
}

}  // namespace detail

/// Parses argv (without the program name), runs one subcommand and writes
/// the report. Exit codes: 0 success, 1 domain error, 2 parse/usage error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered groups, GF(2) cohomology and bundle classification", "ordk"};
  app.require_subcommand(1);
  detail::Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--complex", o.complex_file, "simplicial complex JSON");
    sub->add_option("--bundle", o.bundle_files, "bundle JSON (repeatable)");
    sub->add_option("--file", o.files, "input JSON (repeatable)");
    sub->add_option("--dim", o.dim, "dimension / truncation degree");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_flag("--approx", o.approx, "add approximate decimals");
    sub->add_flag("--strict", o.strict, "reject complexes with missing faces");
  };

  struct Entry {
    const char* name;
    const char* help;
    Report (*run)(const detail::Options&);
  };
  const Entry entries[] = {
      {"cohomology", "GF(2) cohomology ranks and generators", detail::run_cohomology},
      {"cup", "cup product of two cochains", detail::run_cup},
      {"group", "ordered group diagnostics", detail::run_group},
      {"states", "extreme states and the natural map", detail::run_states},
      {"frames", "standard frames of oriented planes", detail::run_frames},
      {"sw", "total Stiefel-Whitney class arithmetic", detail::run_sw},
      {"classify", "compare the w1 classes of two bundles", detail::run_classify},
      {"enumerate", "list H^1(K; Z2) with realizing bundles", detail::run_enumerate},
      {"trivialize", "global orientation or odd-cycle witness", detail::run_trivialize},
      {"demo-kronecker", "ordered groups of linear foliations of the torus", detail::run_demo},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    subs.emplace_back(sub, &e);
  }
  auto* group = subs[2].first;
  group->add_option("--check", o.check, "summary|total|positive|compare|unit|unperforated|riesz|ideal|quotient");
  group->add_option("--element", o.elements, "group element as comma list (repeatable)");
  group->add_option("--bound", o.bound, "order-unit multiplier bound");
  group->add_option("--radius", o.radius, "interpolation search radius");
  group->add_option("--multiplier", o.multiplier, "unperforation multiplier n");
  group->add_option("--subset", o.subset, "basis indices (0-based, comma list)");
  auto* states = subs[3].first;
  states->add_option("--unit", o.unit, "order unit as comma list");
  states->add_option("--element", o.elements, "element for the natural map");
  auto* sw = subs[5].first;
  sw->add_option("--rank", o.rank, "bundle rank k");
  sw->add_option("--sections", o.sections, "number of independent sections m");
  sw->add_option("--nu", o.nu, "skeleton dimension for the obstruction group");
  subs[7].first->add_option("--rank", o.rank, "fiber rank of the realizing bundles");
  auto* demo = subs[9].first;
  demo->add_option("--slope", o.slope, "slope p/q or p/q+r/s√D");
  demo->add_option("--subdivisions", o.subdivisions, "vertices of the circle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    try {
      const Report report = entry->run(o);
      if (o.json)
        out << report.to_json().dump(2) << "\n";
      else
        out << report.text();
      return 0;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return e.code() == ErrorCode::Parse ? 2 : 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }
  err << app.help();
  return 2;
}

}  // namespace ordk::cli
