#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superlie/corpus.hpp"
#include "superlie/cyclic.hpp"
#include "superlie/io.hpp"
#include "superlie/report.hpp"
#include "superlie/verify.hpp"

using namespace superlie;
namespace fs = std::filesystem;
using io::Json;

namespace {

constexpr int kExitCertified = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

/// Every option of every command; each subcommand fills its own part.
struct Options {
  std::string out = "text";
  std::string command;
  std::vector<std::string> paths;
  std::string act_mn, act_nm;
  bool exterior = false, uce = false, sixterm = false;
  int degree = 2;
  std::string module;
  std::string hopf;
  int cls = 0;
  bool no_truncate = false;
  std::string nonabelian;
  std::string emit;
  std::string suite;
  std::string corpus = SUPERLIE_DATA_DIR;
  bool list = false;
  std::string write_dir;
  std::string single;  // lone positional file of the shorthand commands
};

/// Errors caused by the input rather than by the mathematics.
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error("InputError: " + what) {}
};

Certificate failure(const std::string& what) {
  Certificate c;
  c.fail(what);
  return c;
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw InputError(path + ": cannot write");
  o << j.dump(2) << '\n';
}

template <class S>
Action<S> parse_action_arg(io::Loader<S>& L, const std::string& arg, const LieSuperAlgebra<S>& actor,
                           const LieSuperAlgebra<S>& target) {
  if (arg == "adjoint") {
    if (!io::Loader<S>::same_algebra(actor, target)) throw InputError("the adjoint action needs equal algebras");
    return Action<S>::adjoint(actor);
  }
  if (arg == "trivial") return Action<S>::trivial(actor, target);
  auto a = L.action(arg);
  if (!io::Loader<S>::same_algebra(a.actor(), actor) || !io::Loader<S>::same_algebra(a.target(), target))
    throw InputError(arg + ": action does not match the given algebras");
  return a;
}

template <class S>
void tensor_rows(Report::Section& s, const TensorProduct<S>& t) {
  auto im = [&](const Mat<S>& f, const SuperSpace& target) { return super_dim(target, Subspace<S>::image(f)); };
  s.add("M (x) N", t.algebra.space().dims().str());
  s.add("[M,N]^M", im(t.mu.matrix, t.m.space()).str());
  s.add("[M,N]^N", im(t.nu.matrix, t.n.space()).str());
  s.add("Ker mu", super_dim(t.algebra.space(), kernel(t.mu.matrix)).str());
  s.add("Ker nu", super_dim(t.algebra.space(), kernel(t.nu.matrix)).str());
}

template <class S>
void cmd_check(Options& o, io::Loader<S>& L, Report& r) {
  const fs::path path = o.paths.at(0);
  auto& s = r.section("check");
  switch (L.kind(path)) {
    case io::FileKind::Lie: {
      auto P = L.lie(path);
      auto cert = check_lie_axioms(P);
      s.add("kind", "Lie superalgebra");
      s.add("dim", P.space().dims().str());
      if (cert.ok()) {
        auto sr = series(P);
        std::string summary = "certified, dim " + P.space().dims().str();
        summary += sr.nilpotency_class ? ", class " + std::to_string(*sr.nilpotency_class) : ", not nilpotent";
        if (sr.derived_length) s.add("derived length", std::to_string(*sr.derived_length));
        if (sr.perfect) summary += ", perfect";
        s.add("result", summary);
      } else {
        s.add("result", "axioms violated");
      }
      r.check("Lie axioms", cert);
      if (!o.emit.empty()) write_json(o.emit, io::emit_lie(P, L.field()));
      break;
    }
    case io::FileKind::Assoc: {
      auto A = L.assoc(path);
      auto cert = check_assoc_axioms(A);
      s.add("kind", "associative superalgebra");
      s.add("dim", A.space().dims().str());
      if (cert.ok())
        s.add("result", std::string("associative, ") + (A.unit() ? "unital" : "not unital") + ", " +
                            (is_supercommutative(A) ? "supercommutative" : "not supercommutative"));
      else
        s.add("result", "axioms violated");
      r.check("associative axioms", cert);
      if (!o.emit.empty()) write_json(o.emit, io::emit_assoc(A, L.field()));
      break;
    }
    case io::FileKind::Action: {
      auto a = L.action(path);
      s.add("kind", "action");
      s.add("actor", a.actor().name() + " " + a.actor().space().dims().str());
      s.add("target", a.target().name() + " " + a.target().space().dims().str());
      r.check("action axioms", check_action(a));
      break;
    }
    case io::FileKind::Crossed: {
      auto c = L.crossed(path);
      s.add("kind", "crossed module");
      s.add("source", c.m.name() + " " + c.m.space().dims().str());
      s.add("target", c.p.name() + " " + c.p.space().dims().str());
      r.check("crossed module axioms", check_crossed(c));
      break;
    }
    case io::FileKind::Presentation: {
      auto pres = L.presentation(path);
      s.add("kind", "presentation");
      s.add("generators", pres.gens.space().dims().str());
      s.add("relators", std::to_string(pres.relators.size()));
      int top = 1;
      for (const auto& rel : pres.relators)
        for (const auto& term : rel.terms) top = std::max(top, term.second.degree());
      auto F = free_truncated<S>(pres.gens, top);
      for (const auto& rel : pres.relators) evaluate_relator(F, rel);
      r.check("relators homogeneous", Certificate{});
      break;
    }
  }
}

template <class S>
void cmd_tensor(Options& o, io::Loader<S>& L, Report& r) {
  const fs::path pm = o.paths.at(0), pn = o.paths.at(1);
  auto kind_m = L.kind(pm), kind_n = L.kind(pn);
  auto& s = r.section("tensor");
  if (kind_m == io::FileKind::Crossed && kind_n == io::FileKind::Crossed) {
    if (!o.act_mn.empty() || !o.act_nm.empty()) throw InputError("crossed modules induce their own actions");
    if (o.uce) throw InputError("--uce takes a Lie superalgebra");
    auto cm = L.crossed(pm), cn = L.crossed(pn);
    auto t = tensor_of_crossed(cm, cn);
    tensor_rows(s, t);
    r.check("tensor product", certify_tensor(t));
    if (o.exterior) {
      auto x = nonabelian_exterior(t, cm, cn);
      s.add("M [] N", super_dim(t.algebra.space(), x.square).str());
      s.add("M ^ N", x.algebra().space().dims().str());
      r.check("exterior product", check_lie_axioms(x.algebra()));
      if (!o.emit.empty()) write_json(o.emit, io::emit_lie(x.algebra(), L.field()));
    } else if (!o.emit.empty()) {
      write_json(o.emit, io::emit_lie(t.algebra, L.field()));
    }
    return;
  }
  if (kind_m != io::FileKind::Lie || kind_n != io::FileKind::Lie)
    throw InputError("tensor takes two Lie superalgebra files or two crossed-module files");
  auto M = L.lie(pm), N = L.lie(pn);
  bool square = io::Loader<S>::same_algebra(M, N);
  std::string mn = o.act_mn.empty() ? (square ? "adjoint" : "trivial") : o.act_mn;
  std::string nm = o.act_nm.empty() ? (square ? "adjoint" : "trivial") : o.act_nm;
  auto a_mn = parse_action_arg(L, mn, M, N);
  auto a_nm = parse_action_arg(L, nm, N, M);
  s.add("actions", "M on N " + mn + ", N on M " + nm);
  bool adjoint_square = square && mn == "adjoint" && nm == "adjoint";
  if ((o.exterior || o.uce) && !adjoint_square)
    throw InputError("--exterior and --uce on algebra files need one algebra with its adjoint actions");
  auto t = nonabelian_tensor(M, N, a_mn, a_nm);
  tensor_rows(s, t);
  r.check("tensor product", certify_tensor(t));
  std::optional<ExteriorProduct<S>> x;
  if (o.exterior) {
    x = exterior_square(M);
    s.add("M [] N", super_dim(x->tensor.algebra.space(), x->square).str());
    s.add("M ^ N", x->algebra().space().dims().str());
    r.check("exterior product", check_lie_axioms(x->algebra()));
  }
  if (o.uce) {
    auto u = uce(M);
    auto h2 = homology(M, 2).dim;
    auto& us = r.section("universal central extension");
    us.add("Ker(P (x) P -> P)", u.kernel_dim.str());
    us.add("H2 (complex)", h2.str());
    Certificate c = u.cert;
    c.require(u.kernel_dim == h2, "kernel " + u.kernel_dim.str() + " differs from H2 " + h2.str());
    r.check("universal central extension", c);
  }
  if (!o.emit.empty()) write_json(o.emit, io::emit_lie(x ? x->algebra() : t.algebra, L.field()));
}

template <class S>
void cmd_homology(Options& o, io::Loader<S>& L, Report& r) {
  std::optional<LieSuperAlgebra<S>> P;
  if (!o.paths.empty()) P = L.lie(o.paths.at(0));
  if (P) {
    Supermodule<S> M = ground_module(*P);
    if (o.module == "adjoint") {
      M = adjoint_module(*P);
    } else if (!o.module.empty() && o.module != "trivial") {
      M = L.action(o.module);
      if (!io::Loader<S>::same_algebra(M.actor(), *P)) throw InputError(o.module + ": module is not over " + P->name());
      if (!M.target().is_abelian()) throw InputError(o.module + ": a module must act on an abelian algebra");
    }
    if (o.degree < 0) throw InputError("-n must be nonnegative");
    auto c = ce_complex(*P, M, o.degree + 1);
    auto& s = r.section("homology");
    for (int n = 0; n <= o.degree; ++n) s.add("H" + std::to_string(n), homology_of(c, n).dim.str());
    r.check("d o d = 0", Certificate{});
  }
  if (!o.hopf.empty()) {
    if (o.cls < 1) throw InputError("--hopf needs --class c >= 1");
    auto pres = L.presentation(o.hopf);
    auto h = hopf_formula(pres, o.cls, !o.no_truncate).dim;
    auto presented = presented_algebra(pres, o.cls);
    auto h2 = homology(presented, 2).dim;
    auto& s = r.section("Hopf formula");
    s.add("(R n [F,F]) / [F,R]", h.str());
    s.add("H2 of the presented algebra", h2.str());
    Certificate c;
    c.require(h == h2, "Hopf quotient " + h.str() + " differs from H2 " + h2.str());
    if (P) {
      auto hp = homology(*P, 2).dim;
      s.add("H2 of " + P->name(), hp.str());
      c.require(presented.space().dims() == P->space().dims(),
                "presented algebra has dim " + presented.space().dims().str() + ", " + P->name() + " has " + P->space().dims().str());
      c.require(h == hp, "Hopf quotient " + h.str() + " differs from H2(" + P->name() + ") " + hp.str());
    }
    r.check("Hopf formula", c);
    if (!o.emit.empty()) write_json(o.emit, io::emit_lie(presented, L.field()));
  }
  if (!o.nonabelian.empty()) {
    if (!P) throw InputError("--nonabelian needs the algebra P");
    bool identity = o.nonabelian == "identity";
    auto cm = identity ? identity_crossed(*P) : L.crossed(o.nonabelian);
    if (!io::Loader<S>::same_algebra(cm.p, *P)) throw InputError(o.nonabelian + ": crossed module is not over " + P->name());
    auto h = nh(*P, cm);
    auto& s = r.section("non-abelian homology");
    s.add("nh0", h.dim0.str());
    s.add("nh1", h.dim1.str());
    Certificate c = check_crossed(cm);
    if (identity) {
      auto h1 = homology(*P, 1).dim;
      c.require(h.dim0 == h1, "nh0(P,P) " + h.dim0.str() + " differs from H1 " + h1.str());
      if (series(*P).perfect) {
        auto h2 = homology(*P, 2).dim;
        s.add("H2", h2.str());
        c.require(h.dim1 == h2, "nh1(P,P) " + h.dim1.str() + " differs from H2 " + h2.str() + " for perfect P");
      }
    }
    r.check("non-abelian homology", c);
  }
  if (!P && o.hopf.empty()) throw InputError("homology needs an algebra file or --hopf");
}

template <class S>
void cmd_cyclic(Options& o, io::Loader<S>& L, Report& r) {
  auto A = L.assoc(o.paths.at(0));
  if (!A.unit()) throw NotUnital(A.name() + " has no unit");
  auto& s = r.section("cyclic homology");
  auto hc0 = hc(A, 0).dim, hc1 = hc(A, 1).dim;
  auto model = hc1_kernel_model(A);
  auto milnor = milnor_hc1(A);
  s.add("HC0", hc0.str());
  s.add("HC1", hc1.str());
  s.add("HC1 (kernel model)", model.dim.str());
  s.add("HC1^M", milnor.dim.str());
  Certificate c;
  c.require(model.dim == hc1, "kernel model " + model.dim.str() + " differs from HC1 " + hc1.str());
  if (is_supercommutative(A)) {
    r.notes.push_back("supercommutative: HC1 = HC1^M");
    c.require(milnor.dim == hc1, "HC1^M " + milnor.dim.str() + " differs from HC1 " + hc1.str());
  }
  r.check("HC1 cross-check", c);
  if (o.sixterm) {
    auto six = cyclic_sixterm(A);
    auto& t = r.section("six-term sequence");
    for (const auto& [name, d] : six.table) t.add(name, d.str());
    if (six.corollary) r.notes.push_back(std::string("perfect: nh1(A,V(A)) + HC1 = H2(A) ") + (*six.corollary ? "holds" : "fails"));
    r.check("six-term sequence", six.cert());
  }
}

template <class S>
void run_field(Options& o, Report& r, const FieldSpec& f) {
  io::Loader<S> L(f);
  try {
    if (o.command == "check") cmd_check(o, L, r);
    else if (o.command == "tensor") cmd_tensor(o, L, r);
    else if (o.command == "homology") cmd_homology(o, L, r);
    else if (o.command == "cyclic") cmd_cyclic(o, L, r);
  } catch (...) {
    r.inputs = L.digests();
    throw;
  }
  r.inputs = L.digests();
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InputError*>(&e) || dynamic_cast<const SizeError*>(&e) ||
         dynamic_cast<const FieldUnsupported*>(&e) || dynamic_cast<const DegreeOverflow*>(&e);
}

std::string first_input(const Options& o) {
  if (!o.paths.empty()) return o.paths.front();
  if (!o.hopf.empty()) return o.hopf;
  throw InputError("no input file");
}

int print(const Options& o, const Report& r, int status) {
  if (o.out == "json") {
    auto j = r.json();
    j["status"] = status;
    std::cout << j.dump(2) << '\n';
  } else {
    auto text = r.text();
    if (status != r.status()) text = text.substr(0, text.rfind("status: ")) + "status: " + std::to_string(status) + "\n";
    std::cout << text;
  }
  return status;
}

int dispatch(Options& o, Report& r) {
  if (o.command == "verify") {
    std::vector<std::string> ids = o.suite == "all" ? verify::suite_ids() : std::vector<std::string>{o.suite};
    for (const auto& id : ids) {
      auto part = verify::run(id, o.corpus);
      for (auto& s : part.sections) {
        s.title = id + ": " + s.title;
        r.sections.push_back(std::move(s));
      }
      for (auto& c : part.checks) r.checks.push_back(std::move(c));
      for (auto& in : part.inputs)
        if (std::find(r.inputs.begin(), r.inputs.end(), in) == r.inputs.end()) r.inputs.push_back(in);
    }
    return r.status();
  }
  if (o.command == "emit") {
    auto files = corpus::files();
    if (o.list) {
      auto& s = r.section("corpus");
      for (const auto& f : files) s.add(f.path, f.json.value("kind", ""));
      return r.status();
    }
    if (!o.write_dir.empty()) {
      corpus::write(o.write_dir);
      r.notes.push_back("wrote " + std::to_string(files.size()) + " files to " + o.write_dir);
      return r.status();
    }
    for (const auto& f : files)
      if (f.path == o.paths.at(0) || f.path == o.paths.at(0) + ".json") {
        std::cout << f.json.dump(2) << '\n';
        return kExitCertified;
      }
    throw InputError("no bundled file named " + o.paths.at(0));
  }
  auto f = io::peek_field(first_input(o));
  if (f.kind == FieldSpec::Kind::Rationals)
    run_field<Rational>(o, r, f);
  else
    run_field<ModP>(o, r, f);
  return r.status();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations with Lie superalgebras: tensor and exterior products, homology, cyclic homology"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--out", o.out, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto emit_opt = [&](CLI::App* c, const std::string& what) { c->add_option("--emit", o.emit, "Write " + what + " as JSON to this path"); };

  auto* check = app.add_subcommand("check", "Check the axioms of an algebra, action, crossed module or presentation file");
  check->add_option("file", o.paths, "Input file")->required()->expected(1);
  emit_opt(check, "the parsed algebra");

  auto add_tensor = [&](const std::string& name, const std::string& desc) {
    auto* t = app.add_subcommand(name, desc);
    t->add_option("files", o.paths, "Two Lie superalgebra files or two crossed-module files")->required()->expected(2);
    t->add_option("--act-mn", o.act_mn, "Action of M on N: adjoint, trivial or an action file");
    t->add_option("--act-nm", o.act_nm, "Action of N on M: adjoint, trivial or an action file");
    t->add_flag("--exterior", o.exterior, "Also compute M [] N and M ^ N");
    t->add_flag("--uce", o.uce, "Universal central extension of a perfect algebra, compared with H2");
    emit_opt(t, "M (x) N, or M ^ N with --exterior");
    return t;
  };
  add_tensor("tensor", "Non-abelian tensor product M (x) N");
  auto* exterior = add_tensor("exterior", "Shorthand for tensor --exterior");
  auto* uce_cmd = app.add_subcommand("uce", "Shorthand for tensor P P --uce");
  uce_cmd->add_option("file", o.paths, "Perfect Lie superalgebra file")->required()->expected(1);

  auto add_homology = [&](const std::string& name, const std::string& desc, bool need_p) {
    auto* h = app.add_subcommand(name, desc);
    auto* p = h->add_option("file", o.paths, "Lie superalgebra file")->expected(0, 1);
    if (need_p) p->required();
    h->add_option("-n", o.degree, "Largest homology degree")->capture_default_str();
    h->add_option("-m", o.module, "Coefficients: trivial (the ground field), adjoint or a module action file");
    h->add_option("--hopf", o.hopf, "Presentation file for the Hopf formula");
    h->add_option("--class", o.cls, "Nilpotency class for --hopf");
    h->add_flag("--no-truncate", o.no_truncate, "Do not add the class-(c+1) words to the relators");
    h->add_option("--nonabelian", o.nonabelian, "Crossed-module file or 'identity' for nh0 and nh1");
    emit_opt(h, "the presented algebra (with --hopf)");
    return h;
  };
  add_homology("homology", "Chevalley-Eilenberg homology, Hopf formula and non-abelian homology", false);
  auto* nah = app.add_subcommand("nahomology", "Shorthand for homology P --nonabelian X");
  nah->add_option("file", o.single, "Lie superalgebra file")->required();
  nah->add_option("crossed", o.nonabelian, "Crossed-module file or 'identity'")->required();
  auto* hopf = app.add_subcommand("hopf", "Shorthand for homology --hopf PRES --class c [P]");
  hopf->add_option("presentation", o.hopf, "Presentation file")->required();
  hopf->add_option("--class", o.cls, "Nilpotency class")->required();
  hopf->add_option("--compare", o.paths, "Lie superalgebra file to compare with")->expected(1);
  hopf->add_flag("--no-truncate", o.no_truncate, "Do not add the class-(c+1) words to the relators");
  emit_opt(hopf, "the presented algebra");

  auto add_cyclic = [&](const std::string& name, const std::string& desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("file", o.paths, "Associative superalgebra file")->required()->expected(1);
    c->add_flag("--sixterm", o.sixterm, "Six-term sequence through V(A)");
    return c;
  };
  add_cyclic("cyclic", "HC0, HC1 and Milnor HC1 of a unital associative superalgebra");
  auto* cyc6 = add_cyclic("cyclic-sixterm", "Shorthand for cyclic --sixterm");

  auto* ver = app.add_subcommand("verify", "Run a verification battery over the bundled corpus");
  std::vector<std::string> ids = verify::suite_ids();
  ids.push_back("all");
  ver->add_option("suite", o.suite, "Suite id")->required()->check(CLI::IsMember(ids));
  ver->add_option("--corpus", o.corpus, "Corpus directory")->capture_default_str();

  auto* emit = app.add_subcommand("emit", "Print or write the bundled corpus");
  emit->add_option("name", o.paths, "Bundled file to print")->expected(0, 1);
  emit->add_flag("--list", o.list, "List the bundled files");
  emit->add_option("--write", o.write_dir, "Write every bundled file into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitCertified : kExitInput;
  }
  auto* sub = app.get_subcommands().front();
  o.command = sub->get_name();
  if (sub == exterior) {
    o.command = "tensor";
    o.exterior = true;
  } else if (sub == uce_cmd) {
    o.command = "tensor";
    o.uce = true;
    o.paths.push_back(o.paths.front());
  } else if (sub == nah) {
    o.command = "homology";
    o.paths = {o.single};
  } else if (sub == hopf) {
    o.command = "homology";
  } else if (sub == cyc6) {
    o.command = "cyclic";
    o.sixterm = true;
  }
  if (o.command == "emit" && !o.list && o.write_dir.empty() && o.paths.empty()) {
    std::cerr << "emit needs a name, --list or --write\n";
    return kExitInput;
  }

  Report r;
  r.command.assign(argv + 1, argv + argc);
  try {
    int status = dispatch(o, r);
    if (o.command == "emit" && !o.list && o.write_dir.empty()) return status;
    return print(o, r, status);
  } catch (const Error& e) {
    if (is_input_error(e)) {
      r.notes.push_back(std::string("input error: ") + e.what());
      return print(o, r, kExitInput);
    }
    r.check("error", failure(e.what()));
    return print(o, r, kExitFailure);
  } catch (const std::invalid_argument& e) {
    r.notes.push_back(std::string("input error: ") + e.what());
    return print(o, r, kExitInput);
  }
}
