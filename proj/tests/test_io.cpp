#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "wgi/io.hpp"

using namespace wgi;
using namespace wgitest;

namespace {

std::string temp_path(const std::string& name) {
  return "/tmp/wgi_test_" + name;
}

void put_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

} // namespace

TEST_CASE("system config round trip") {
  std::string path = temp_path("a2.json");
  put_file(path,
           R"({"name":"a2","generators":["s1","s2"],"matrix":[[1,3],[3,1]]})");
  LoadedSystem sys = load_system(path);
  CHECK(sys.name() == "a2");
  CHECK(sys.group().order() == 6);
  CHECK(sys.algebra().gamma_rank() == 1); // one odd class
  CHECK(sys.elt_name(sys.group().identity()) == "");
  CHECK(sys.elt_name(sys.parse_elt("s1s2s1")) == "s1s2s1");
  CHECK(sys.parse_elt("e") == sys.group().identity());
  CHECK(sys.parse_elt("s2s1s2") == sys.parse_elt("s1s2s1"));
  CHECK(sys.parse_genset("s1,s2") == sys.group().full_set());
  CHECK_THROWS_AS(sys.parse_elt("s3"), Error);
  std::remove(path.c_str());
}

TEST_CASE("explicit weights and caps") {
  std::string path = temp_path("b2.json");
  put_file(path, R"({"matrix":[[1,4],[4,1]],
                     "weights":{"s1":[2],"s2":[1]},"cap":50})");
  LoadedSystem sys = load_system(path);
  CHECK(sys.group().order() == 8);
  CHECK(sys.algebra().weights().doubled(0) == ExpVec{4});
  CHECK(sys.algebra().weights().doubled(1) == ExpVec{2});
  std::remove(path.c_str());
}

TEST_CASE("default weights split even-bond classes") {
  std::string path = temp_path("b3.json");
  put_file(path, R"({"matrix":[[1,4,2],[4,1,3],[2,3,1]]})");
  LoadedSystem sys = load_system(path);
  CHECK(sys.algebra().gamma_rank() == 2);
  CHECK(sys.algebra().weights().doubled(1) == sys.algebra().weights().doubled(2));
  CHECK(sys.algebra().weights().doubled(0) != sys.algebra().weights().doubled(1));
  std::remove(path.c_str());
}

TEST_CASE("bad configs raise BadParams") {
  std::string path = temp_path("bad.json");
  put_file(path, R"({"generators":["s1"]})");
  CHECK_THROWS_AS(load_system(path), Error);
  put_file(path, "{nonsense");
  CHECK_THROWS_AS(load_system(path), Error);
  CHECK_THROWS_AS(load_system(temp_path("missing_file.json")), Error);
  std::remove(path.c_str());
}

TEST_CASE("scalar JSON round trip") {
  Scalar s = Scalar::monomial(3, {2, -1}) - Scalar::monomial(1, {0, 0});
  CHECK(scalar_from_json(scalar_to_json(s)) == s);
  CHECK(scalar_from_json(json::array()).is_zero());
}

TEST_CASE("ideal file") {
  std::string spath = temp_path("a2b.json");
  put_file(spath, R"({"matrix":[[1,3],[3,1]]})");
  LoadedSystem sys = load_system(spath);
  std::string ipath = temp_path("ideal.json");
  put_file(ipath, R"({"generators":[["s1"]]})");
  IdealE E = load_ideal(sys, ipath);
  CHECK(E.members.size() == 2);
  CHECK(E.contains(sys.parse_elt("s1")));
  std::remove(spath.c_str());
  std::remove(ipath.c_str());
}

TEST_CASE("r-table JSON round trip keeps empty rows") {
  std::string spath = temp_path("a2c.json");
  put_file(spath, R"({"matrix":[[1,3],[3,1]]})");
  LoadedSystem sys = load_system(spath);
  const Algebra& H = sys.algebra();

  IdealRTable r;
  Elt s1 = sys.parse_elt("s1");
  r.rows[{1, s1}] = {{sys.group().identity(), H.q_s(1) * H.q_s(1)}};
  IdealRTable back = rtable_from_json(sys, rtable_to_json(sys, r));
  CHECK(back.rows == r.rows);

  IdealRTable empty_row;
  empty_row.rows[{1, s1}] = {};
  IdealRTable back2 = rtable_from_json(sys, rtable_to_json(sys, empty_row));
  CHECK(back2.rows.size() == 1);
  CHECK(back2.rows.begin()->second.empty());
  std::remove(spath.c_str());
}

TEST_CASE("rpoly export formats") {
  std::string spath = temp_path("a2d.json");
  put_file(spath, R"({"name":"a2","matrix":[[1,3],[3,1]]})");
  LoadedSystem sys = load_system(spath);
  RTable t = classical_r_oracle(sys.algebra());
  std::string csv = rpoly_csv(sys, t);
  CHECK(csv.find("sigma,tau,poly") != std::string::npos);
  CHECK(csv.find("# system: a2") != std::string::npos);
  CHECK(csv.find(",s1,\"q - 1\"") != std::string::npos); // R_{e,s1}

  json j = rpoly_json(sys, t);
  CHECK(j["context"]["kind"] == "classical");
  bool found = false;
  for (const auto& entry : j["entries"])
    if (entry["sigma"] == "" && entry["tau"] == "s1") {
      CHECK(scalar_from_json(entry["poly"]) ==
            sys.algebra().q_s(0) - sys.algebra().one());
      found = true;
    }
  CHECK(found);
  std::remove(spath.c_str());
}

TEST_CASE("w-graph file") {
  std::string spath = temp_path("a2e.json");
  put_file(spath, R"({"matrix":[[1,3],[3,1]]})");
  LoadedSystem sys = load_system(spath);
  std::string gpath = temp_path("graph.json");
  put_file(gpath, R"({
    "vertices": ["e", "s2", "s1s2"],
    "I": {"e": ["s1"], "s2": ["s2"], "s1s2": ["s1", "s2"]},
    "mu": [
      {"x":"e",    "y":"s2", "s":"s1", "poly":[[[0],1]]},
      {"x":"s1s2", "y":"s2", "s":"s1", "poly":[[[0],1]]},
      {"x":"s2",   "y":"e",  "s":"s2", "poly":[[[0],1]]}
    ]})");
  WGraphDatum g = wgraph_from_json(sys, read_json_file(gpath));
  CHECK(g.vertices.size() == 3);
  CHECK(validate_wgraph(sys.algebra(), g).pass);
  std::remove(spath.c_str());
  std::remove(gpath.c_str());
}
