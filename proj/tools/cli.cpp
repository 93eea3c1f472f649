#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

#include "pglrep/classify.hpp"
#include "pglrep/construct.hpp"
#include "pglrep/errors.hpp"
#include "pglrep/poincare.hpp"
#include "pglrep/surfrep.hpp"
#include "repfile.hpp"

namespace pglrep::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { Text, Json };

Mu2Value parse_mu2(const std::string& s) {
  if (s == "0") return Mu2Value::Zero;
  if (s == "1") return Mu2Value::One;
  if (s == "omega") return Mu2Value::Omega;
  throw ParseError("--mu2 must be one of 0, 1, omega; got '" + s + "'");
}

ojson coefficient_json(const IntPolynomial& p) {
  ojson arr = ojson::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

std::string coefficient_text(const IntPolynomial& p) {
  std::string s;
  for (const auto& c : p.coefficients()) {
    if (!s.empty()) s += ' ';
    s += c.get_str();
  }
  return s.empty() ? "0" : s;
}

struct Options {
  Format format = Format::Text;
  int genus = 2;
  int n = 4;
  std::string mu1;
  std::string mu2;
  int w2 = 0;
  int deg = 0;
  std::string out_path;
  std::string in_path;
};

int cmd_invariants(const Options& o, std::ostream& out) {
  RepDocument doc = read_rep_file(o.in_path);
  const SurfaceRep rep(doc.genus, std::move(doc.generators));
  const Z2Vector d1 = delta1(rep);
  const Delta2 d2 = delta2(rep);
  std::optional<Mu2Value> td;
  if (d1.is_zero()) td = tilde_delta(rep);
  const InvariantClass cls = invariants(rep);

  if (o.format == Format::Json) {
    ojson j;
    j["n"] = rep.dimension();
    j["genus"] = rep.genus();
    j["delta1"] = d1.to_string();
    j["delta2"] = to_string(d2);
    j["tilde_delta"] = td ? ojson(to_string(*td)) : ojson(nullptr);
    j["mu1"] = cls.mu1.to_string();
    j["mu2"] = to_string(cls.mu2);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "n: " << rep.dimension() << '\n'
      << "genus: " << rep.genus() << '\n'
      << "delta1: " << d1.to_string() << '\n'
      << "delta2: " << to_string(d2) << '\n';
  if (td) out << "tilde_delta: " << to_string(*td) << '\n';
  out << "mu1: " << cls.mu1.to_string() << '\n' << "mu2: " << to_string(cls.mu2) << '\n';
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const InvariantClass target{Z2Vector::from_string(o.mu1), parse_mu2(o.mu2)};
  if (target.mu1.size() != 2 * o.genus) {
    throw InvalidClass("--mu1 must have " + std::to_string(2 * o.genus) + " bits for genus " +
                       std::to_string(o.genus));
  }
  if (!target.valid()) throw InvalidClass("mu2 = 1 requires mu1 = 0");
  const SurfaceRep rep = build_representation(o.genus, o.n, target);
  if (o.out_path.empty()) {
    out << to_json(rep).dump(2) << '\n';
    return kOk;
  }
  write_rep_file(o.out_path, rep);
  if (o.format == Format::Json) {
    ojson j;
    j["out"] = o.out_path;
    j["mu1"] = target.mu1.to_string();
    j["mu2"] = to_string(target.mu2);
    out << j.dump() << '\n';
  } else {
    out << "wrote " << o.out_path << ": " << to_string(target) << '\n';
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto classes = invariant_classes(o.genus, o.n);
  if (o.format == Format::Json) {
    ojson rows = ojson::array();
    for (const auto& c : classes) rows.push_back({{"mu1", c.mu1.to_string()}, {"mu2", to_string(c.mu2)}});
    ojson j;
    j["genus"] = o.genus;
    j["n"] = o.n;
    j["count"] = classes.size();
    j["classes"] = std::move(rows);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# genus=" << o.genus << " n=" << o.n << " classes=" << classes.size() << '\n';
  for (const auto& c : classes) out << c.mu1.to_string() << ' ' << to_string(c.mu2) << '\n';
  return kOk;
}

int cmd_components(const Options& o, std::ostream& out) {
  const ComponentReport report = component_report(o.n, o.genus);
  if (o.format == Format::Json) {
    ojson rows = ojson::array();
    for (const auto& e : report.entries) {
      rows.push_back({{"mu1", e.cls.mu1.to_string()},
                      {"mu2", to_string(e.cls.mu2)},
                      {"components", e.multiplicity}});
    }
    ojson j;
    j["genus"] = o.genus;
    j["n"] = o.n;
    j["z0"] = z0(o.n, o.genus);
    j["classes"] = std::move(rows);
    j["total"] = report.total;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# genus=" << o.genus << " n=" << o.n << " z0=" << z0(o.n, o.genus) << '\n';
  for (const auto& e : report.entries) {
    out << e.cls.mu1.to_string() << ' ' << to_string(e.cls.mu2) << ' ' << e.multiplicity << '\n';
  }
  out << "total " << report.total << '\n';
  return kOk;
}

int cmd_egl_components(const Options& o, std::ostream& out) {
  const EglComponentReport report = egl_component_counts(o.deg, o.genus, o.n);
  auto payload = [](const TwistedClass& c) {
    return c.w2 ? "(" + std::to_string(*c.w2) + "," + std::to_string(c.degree) + ")"
                : std::to_string(c.degree);
  };
  if (o.format == Format::Json) {
    ojson rows = ojson::array();
    for (const auto& e : report.entries) {
      ojson row;
      row["mu1bar"] = e.cls.mu1bar.to_string();
      row["w2"] = e.cls.w2 ? ojson(*e.cls.w2) : ojson(nullptr);
      row["deg"] = e.cls.degree;
      row["components"] = e.total_multiplicity;
      row["fibre_components"] = e.fibre_multiplicity;
      rows.push_back(std::move(row));
    }
    ojson j;
    j["genus"] = o.genus;
    j["n"] = o.n;
    j["deg"] = o.deg;
    j["classes"] = std::move(rows);
    j["total"] = report.total;
    j["fibre_total"] = report.fibre_total;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# genus=" << o.genus << " n=" << o.n << " deg=" << o.deg << '\n';
  for (const auto& e : report.entries) {
    out << e.cls.mu1bar.to_string() << ' ' << payload(e.cls) << ' ' << e.total_multiplicity << ' '
        << e.fibre_multiplicity << '\n';
  }
  out << "total " << report.total << '\n' << "fibre_total " << report.fibre_total << '\n';
  return kOk;
}

int cmd_poincare(const Options& o, std::ostream& out) {
  const IntPolynomial so3 = pt_so3(o.w2, o.genus);
  const IntPolynomial sl3 = pt_sl3(o.w2, o.genus);
  if (o.format == Format::Json) {
    ojson j;
    j["w2"] = o.w2;
    j["genus"] = o.genus;
    j["so3"] = coefficient_json(so3);
    j["sl3"] = coefficient_json(sl3);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "w2: " << o.w2 << '\n'
      << "genus: " << o.genus << '\n'
      << "so3: " << coefficient_text(so3) << '\n'
      << "sl3: " << coefficient_text(sl3) << '\n';
  return kOk;
}

int cmd_lift_check(const Options& o, std::ostream& out) {
  const InvariantClass cls{Z2Vector::from_string(o.mu1), parse_mu2(o.mu2)};
  if (cls.mu1.size() < 4 || cls.mu1.size() % 2 != 0) {
    throw InvalidClass("--mu1 must have 2g bits with g >= 2");
  }
  if (!cls.valid()) throw InvalidClass("mu2 = 1 requires mu1 = 0");
  ojson j;
  j["mu1"] = cls.mu1.to_string();
  j["mu2"] = to_string(cls.mu2);
  for (LiftTarget t : {LiftTarget::SOn, LiftTarget::Spinn, LiftTarget::Pinn, LiftTarget::On}) {
    std::string answer;
    try {
      answer = lifts_to(cls, t) ? "yes" : "no";
    } catch (const TargetInvalidForClass&) {
      answer = "n/a";
    }
    if (o.format == Format::Text) {
      out << to_string(t) << ' ' << answer << '\n';
    } else {
      j[to_string(t)] = answer;
    }
  }
  if (o.format == Format::Json) out << j.dump() << '\n';
  return kOk;
}

std::string element_text(const GroupElement& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

int cmd_bundle_classify(const Options& o, std::ostream& out) {
  const Z2Vector mu1 = Z2Vector::from_string(o.mu1);
  const PoGroupData data = po_group_data(o.n);
  std::vector<GroupElement> image{data.pi0.zero()};
  if (!mu1.is_zero()) image.push_back(data.pi0.generator(0));
  const Subgroup gamma = gamma_subgroup(data.pi0, data.pi1, data.action, image);
  const auto reps = classify_bundles(data.pi0, data.pi1, data.action, image);

  if (o.format == Format::Json) {
    ojson g = ojson::array();
    for (const auto& x : gamma) g.push_back(x);
    ojson r = ojson::array();
    for (const auto& x : reps) {
      r.push_back({{"element", x}, {"kernel", to_string(po_kernel_element(o.n, x))}});
    }
    ojson j;
    j["n"] = o.n;
    j["mu1"] = mu1.to_string();
    j["pi1_orders"] = data.pi1.orders();
    j["gamma"] = std::move(g);
    j["classes"] = std::move(r);
    out << j.dump() << '\n';
    return kOk;
  }
  out << "# n=" << o.n << " mu1=" << mu1.to_string() << " pi1=";
  for (std::size_t i = 0; i < data.pi1.orders().size(); ++i) {
    out << (i ? "x" : "") << "Z" << data.pi1.orders()[i];
  }
  out << '\n' << "gamma:";
  for (const auto& x : gamma) out << ' ' << element_text(x);
  out << '\n';
  for (const auto& x : reps) out << element_text(x) << ' ' << to_string(po_kernel_element(o.n, x)) << '\n';
  out << "classes " << reps.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Topological invariants of surface group representations in PGL(n,R)"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_genus = [&](CLI::App* sub) { sub->add_option("--genus", o.genus, "Surface genus")->required(); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Matrix size")->required(); };

  auto* invariants_cmd = app.add_subcommand("invariants", "Compute the invariants of a representation file");
  invariants_cmd->add_option("path", o.in_path, "Representation document")->required();
  add_format(invariants_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a representation with given (mu1, mu2)");
  add_genus(construct_cmd);
  add_n(construct_cmd);
  construct_cmd->add_option("--mu1", o.mu1, "Bit string of length 2g")->required();
  construct_cmd->add_option("--mu2", o.mu2, "0, 1 or omega")->required();
  construct_cmd->add_option("--out", o.out_path, "Output file (stdout if omitted)");
  add_format(construct_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "List all invariant classes");
  add_genus(classify_cmd);
  add_n(classify_cmd);
  add_format(classify_cmd);

  auto* components_cmd = app.add_subcommand("components", "Connected components per class");
  add_genus(components_cmd);
  add_n(components_cmd);
  add_format(components_cmd);

  auto* egl_cmd = app.add_subcommand("egl-components", "Components of the EGL(n,R) moduli spaces");
  add_genus(egl_cmd);
  add_n(egl_cmd);
  egl_cmd->add_option("--deg", o.deg, "Degree of L (0 or 1)")->required();
  add_format(egl_cmd);

  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomials for SO(3) and SL(3,R)");
  add_genus(poincare_cmd);
  poincare_cmd->add_option("--w2", o.w2, "Second Stiefel-Whitney class (0 or 1)")->required();
  add_format(poincare_cmd);

  auto* lift_cmd = app.add_subcommand("lift-check", "Which groups a PO(n)-bundle lifts to");
  lift_cmd->add_option("--mu1", o.mu1, "Bit string of length 2g")->required();
  lift_cmd->add_option("--mu2", o.mu2, "0, 1 or omega")->required();
  add_format(lift_cmd);

  auto* bundle_cmd = app.add_subcommand("bundle-classify", "Classify PO(n)-bundles with given mu1");
  add_n(bundle_cmd);
  bundle_cmd->add_option("--mu1", o.mu1, "Bit string of length 2g")->required();
  add_format(bundle_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (invariants_cmd->parsed()) return cmd_invariants(o, out);
    if (construct_cmd->parsed()) return cmd_construct(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (components_cmd->parsed()) return cmd_components(o, out);
    if (egl_cmd->parsed()) return cmd_egl_components(o, out);
    if (poincare_cmd->parsed()) return cmd_poincare(o, out);
    if (lift_cmd->parsed()) return cmd_lift_check(o, out);
    if (bundle_cmd->parsed()) return cmd_bundle_classify(o, out);
  } catch (const NotOrthogonal& e) {
    err << "error: " << e.what() << '\n';
    return kNotOrthogonal;
  } catch (const RelationViolated& e) {
    err << "error: " << e.what() << '\n';
    return kRelationViolated;
  } catch (const InvalidClass& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidClass;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace pglrep::cli
