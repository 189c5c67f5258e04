#include "liemech/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liemech {

using nlohmann::json;

std::string algebra_to_json(const LieAlgebra& g) {
  json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis_labels"] = g.basis_labels();
  json structure = json::array();
  for (int k = 0; k < g.dim(); ++k) {
    json slice = json::array();
    for (int i = 0; i < g.dim(); ++i) {
      json row = json::array();
      for (int jj = 0; jj < g.dim(); ++jj) row.push_back(g.structure(k, i, jj));
      slice.push_back(row);
    }
    structure.push_back(slice);
  }
  j["structure"] = structure;
  if (g.has_rep()) {
    j["rep_dim"] = g.rep_dim();
    json rep = json::array();
    for (const Mat& r : g.rep()) {
      json m = json::array();
      for (int i = 0; i < r.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < r.cols(); ++c) row.push_back(r(i, c));
        m.push_back(row);
      }
      rep.push_back(m);
    }
    j["rep"] = rep;
  }
  return j.dump(2);
}

LieAlgebra algebra_from_json(const std::string& text) {
  json j = json::parse(text);
  const int n = j.at("dim").get<int>();
  std::vector<std::string> labels =
      j.at("basis_labels").get<std::vector<std::string>>();
  const auto& structure = j.at("structure");
  if (static_cast<int>(structure.size()) != n)
    throw std::invalid_argument("structure must have dim slices");
  std::vector<Mat> c(n, Mat::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        c[k](i, jj) = structure.at(k).at(i).at(jj).get<double>();

  if (j.contains("rep")) {
    const int d = j.at("rep_dim").get<int>();
    std::vector<Mat> rep;
    for (const auto& m : j.at("rep")) {
      Mat r(d, d);
      for (int i = 0; i < d; ++i)
        for (int col = 0; col < d; ++col) r(i, col) = m.at(i).at(col).get<double>();
      rep.push_back(r);
    }
    LieAlgebra g = LieAlgebra::from_representation(
        j.at("name").get<std::string>(), std::move(labels), std::move(rep));
    // verify the file's structure constants against the representation
    for (int k = 0; k < n; ++k)
      if ((g.structure_tensors()[k] - c[k]).lpNorm<Eigen::Infinity>() > 1e-9)
        throw std::invalid_argument(
            "structure constants disagree with the representation");
    return g;
  }
  return LieAlgebra(j.at("name").get<std::string>(), std::move(labels),
                    std::move(c));
}

void save_algebra(const LieAlgebra& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << algebra_to_json(g) << "\n";
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json(ss.str());
}

LieAlgebra algebra_by_name(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    return load_algebra(spec);
  auto num_after = [&](size_t prefix_len) -> int {
    const std::string tail = spec.substr(prefix_len);
    if (tail.empty() ||
        tail.find_first_not_of("0123456789") != std::string::npos)
      return -1;
    return std::stoi(tail);
  };
  if (spec == "so3") return so3();
  if (spec == "galilei") return galilei();
  if (spec == "cm3") return cm3();
  if (spec == "heavy_top3" || spec == "heavy-top3") return heavy_top3();
  if (spec == "so31") return so31();
  if (spec == "poincare") return poincare();
  if (spec.rfind("sof", 0) == 0 && num_after(3) > 0) {
    int m = num_after(3);
    return so_split_f((m + 1) / 2, m / 2);
  }
  if (spec.rfind("sl", 0) == 0 && num_after(2) > 0) return sl(num_after(2));
  if (spec.rfind("gl", 0) == 0 && num_after(2) > 0) return gl(num_after(2));
  if (spec.rfind("sp", 0) == 0 && num_after(2) > 0) return sp(num_after(2));
  if (spec.rfind("so", 0) == 0 && num_after(2) > 0)
    return so_compact(num_after(2));
  if (spec.rfind("abelian", 0) == 0 && num_after(7) > 0)
    return abelian(num_after(7));
  throw std::invalid_argument(
      "unknown algebra '" + spec +
      "' (try so3, sl<N>, gl<N>, so<M>, sof<M>, sp<2N>, galilei, cm3, "
      "heavy_top3, so31, poincare, abelian<N>, or a .json file)");
}

}  // namespace liemech
