#include "superlie/corpus.hpp"

#include <fstream>

#include "superlie/constructors.hpp"

namespace superlie::corpus {

namespace {

using Q = Rational;
using io::Json;

const FieldSpec kQ = FieldSpec::rationals();

Json lie(LieSuperAlgebra<Q> L, const std::string& name) {
  L.set_name(name);
  return io::emit_lie(L, kQ);
}

Json assoc(const AssocSuperAlgebra<Q>& A, const std::string& name) {
  auto j = io::emit_assoc(A, kQ);
  j["name"] = name;
  return j;
}

Json crossed(const std::string& name, const std::string& source, const std::string& target, const Mat<Q>& boundary) {
  Json j;
  j["kind"] = "crossed";
  j["name"] = name;
  j["source"] = source;
  j["target"] = target;
  j["boundary"] = io::emit_matrix(boundary);
  return j;
}

Json action(const std::string& name, const std::string& actor, const std::string& target, const Action<Q>& a) {
  Json j;
  j["kind"] = "action";
  j["name"] = name;
  j["actor"] = actor;
  j["target"] = target;
  j["entries"] = io::emit_action_entries(a);
  return j;
}

}  // namespace

std::vector<File> files() {
  std::vector<File> out;
  auto k = ground_field<Q>();
  out.push_back({"abelian10.json", lie(abelian_algebra<Q>(1, 0), "abelian(1|0)")});
  out.push_back({"abelian01.json", lie(abelian_algebra<Q>(0, 1), "abelian(0|1)")});
  out.push_back({"abelian11.json", lie(abelian_algebra<Q>(1, 1), "abelian(1|1)")});
  out.push_back({"abelian21.json", lie(abelian_algebra<Q>(2, 1), "abelian(2|1)")});
  auto heis = heisenberg<Q>();
  out.push_back({"heis.json", lie(heis, "heis")});
  out.push_back({"solv2.json", lie(solvable2<Q>(), "solv2")});
  auto gl11 = matrix_gl(1, 1, k);
  out.push_back({"gl11.json", lie(gl11, "gl(1,1)")});
  out.push_back({"sl21.json", lie(matrix_sl(2, 1, k), "sl(2,1)")});
  out.push_back({"sl30.json", lie(matrix_sl(3, 0, k), "sl(3,0)")});

  auto centre = subalgebra(heis, series(heis).centre);
  out.push_back({"heis_centre_alg.json", lie(centre.algebra, "centre(heis)")});
  out.push_back({"heis_centre.json", crossed("centre(heis) -> heis", "heis_centre_alg.json", "heis.json", centre.inclusion)});
  auto sl11 = subalgebra(gl11, derived_subalgebra(gl11));
  out.push_back({"sl11.json", lie(sl11.algebra, "sl(1,1)")});
  out.push_back({"gl11_sl.json", crossed("sl(1,1) -> gl(1,1)", "sl11.json", "gl11.json", sl11.inclusion)});

  auto solv = solvable2<Q>();
  out.push_back({"solv2_adjoint.json", action("adjoint action of solv2", "solv2.json", "solv2.json", Action<Q>::adjoint(solv))});
  out.push_back({"solv2_trivial.json", action("trivial action of solv2", "solv2.json", "solv2.json", Action<Q>::trivial(solv, solv))});

  out.push_back({"q.json", assoc(k, "q")});
  out.push_back({"dual.json", assoc(dual_numbers<Q>(), "dual")});
  out.push_back({"grassmann.json", assoc(grassmann1<Q>(), "grassmann")});
  out.push_back({"m11.json", assoc(matrix_assoc(1, 1, k), "M(1,1)")});
  out.push_back({"m20.json", assoc(matrix_assoc(2, 0, k), "M(2,0)")});

  GradedGenSet xy({{"x", Parity::Even}, {"y", Parity::Even}});
  out.push_back({"free2.json", io::emit_presentation(Presentation<Q>{xy, {}}, "free on x, y", kQ)});
  auto x = BracketWord::gen("x"), y = BracketWord::gen("y");
  auto c = BracketWord::bracket(x, y);
  Presentation<Q> hp{xy, {Relator<Q>{{{Q(1), BracketWord::bracket(c, x)}}}, Relator<Q>{{{Q(1), BracketWord::bracket(c, y)}}}}};
  out.push_back({"heis_pres.json", io::emit_presentation(hp, "heis", kQ)});

  // [y, z] = y breaks Jacobi on (x, y, z)
  auto tampered = lie(heis, "heis (tampered)");
  tampered["table"].push_back({{"left", "y"}, {"right", "z"}, {"value", Json::array({Json::array({"y", "1"})})}});
  out.push_back({"bad/heis_tampered.json", tampered});
  auto typo = lie(heis, "heis (unknown field)");
  typo["tabel"] = Json::array();
  out.push_back({"bad/heis_unknown_field.json", typo});
  auto fp = lie(heis, "heis over F_5");
  fp["field"] = "Fp:5";
  out.push_back({"bad/heis_f5.json", fp});
  return out;
}

void write(const io::fs::path& dir) {
  for (const auto& f : files()) {
    auto path = dir / f.path;
    io::fs::create_directories(path.parent_path());
    std::ofstream o(path, std::ios::binary);
    if (!o) throw ParseError(path.string() + ": cannot write");
    o << f.json.dump(2) << '\n';
  }
}

}  // namespace superlie::corpus
