#include "anyonkit/jsonio.hpp"

#include <json.hpp>

namespace anyonkit {

using nlohmann::json;

std::string model_to_json(const AnyonModel& m) {
  json j;
  j["schema"] = "anyonkit-model-v1";
  j["name"] = m.name;
  j["fingerprint"] = m.fingerprint();
  std::vector<std::string> labels;
  for (Label l : m.labels()) labels.push_back(label_name(l));
  j["labels"] = labels;
  json qd = json::object();
  for (Label l : m.labels()) qd[label_name(l)] = rational_to_string(m.qdim[int(l)]);
  j["qdim"] = qd;
  json fus = json::array();
  for (Label a : m.labels())
    for (Label b : m.labels())
      for (Label c : m.labels())
        if (m.admissible(a, b, c))
          fus.push_back(label_name(a) + label_name(b) + label_name(c));
  j["fusion"] = fus;
  json fsym = json::array();
  for (const auto& [key, blk] : m.f_blocks) {
    auto rows = m.f_rows(key[0], key[1], key[2], key[3]);
    auto cols = m.f_cols(key[0], key[1], key[2], key[3]);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t jx = 0; jx < cols.size(); ++jx) {
        json e;
        e["a"] = label_name(key[0]);
        e["b"] = label_name(key[1]);
        e["c"] = label_name(key[2]);
        e["d"] = label_name(key[3]);
        e["n"] = label_name(rows[i]);
        e["m"] = label_name(cols[jx]);
        e["value"] = blk.at(int(i), int(jx)).to_string();
        fsym.push_back(std::move(e));
      }
  }
  j["f_symbols"] = fsym;
  json rsym = json::array();
  for (const auto& [key, v] : m.r_symbols) {
    json e;
    e["a"] = label_name(key[0]);
    e["b"] = label_name(key[1]);
    e["c"] = label_name(key[2]);
    e["value"] = v.to_string();
    rsym.push_back(std::move(e));
  }
  j["r_symbols"] = rsym;
  json srows = json::array();
  for (int i = 0; i < m.s_matrix.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.s_matrix.cols(); ++c) row.push_back(m.s_matrix.at(i, c).to_string());
    srows.push_back(std::move(row));
  }
  j["s_matrix"] = srows;
  json t = json::array();
  for (const auto& v : m.t_diag) t.push_back(v.to_string());
  j["t_diag"] = t;
  return j.dump(1);
}

AnyonModel model_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema") != "anyonkit-model-v1")
    throw std::invalid_argument("unsupported model schema");
  AnyonModel m;
  m.name = j.at("name").get<std::string>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  m.num_labels = int(labels.size());
  for (const auto& t : j.at("fusion").get<std::vector<std::string>>()) {
    m.fusion[int(label_from_char(t[0]))][int(label_from_char(t[1]))][int(label_from_char(t[2]))] = 1;
  }
  for (auto& [k, v] : j.at("qdim").items())
    m.qdim[int(label_from_char(k[0]))] = rational_from_string(v.get<std::string>());
  // group the flat f-symbol list back into blocks
  std::map<AnyonModel::FKey, std::map<std::pair<Label, Label>, Cyc>> cells;
  for (const auto& e : j.at("f_symbols")) {
    AnyonModel::FKey key = {label_from_char(e.at("a").get<std::string>()[0]),
                            label_from_char(e.at("b").get<std::string>()[0]),
                            label_from_char(e.at("c").get<std::string>()[0]),
                            label_from_char(e.at("d").get<std::string>()[0])};
    Label n = label_from_char(e.at("n").get<std::string>()[0]);
    Label mm = label_from_char(e.at("m").get<std::string>()[0]);
    cells[key][{n, mm}] = Cyc::parse(e.at("value").get<std::string>());
  }
  for (auto& [key, cmap] : cells) {
    auto rows = m.f_rows(key[0], key[1], key[2], key[3]);
    auto cols = m.f_cols(key[0], key[1], key[2], key[3]);
    Mat blk(int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t c = 0; c < cols.size(); ++c) blk.at(int(i), int(c)) = cmap.at({rows[i], cols[c]});
    m.f_blocks[key] = std::move(blk);
  }
  for (const auto& e : j.at("r_symbols")) {
    m.r_symbols[{label_from_char(e.at("a").get<std::string>()[0]),
                 label_from_char(e.at("b").get<std::string>()[0]),
                 label_from_char(e.at("c").get<std::string>()[0])}] =
        Cyc::parse(e.at("value").get<std::string>());
  }
  auto srows = j.at("s_matrix");
  m.s_matrix = Mat(int(srows.size()), int(srows.size()));
  for (int i = 0; i < m.s_matrix.rows(); ++i)
    for (int c = 0; c < m.s_matrix.cols(); ++c)
      m.s_matrix.at(i, c) = Cyc::parse(srows[i][c].get<std::string>());
  for (const auto& t : j.at("t_diag")) m.t_diag.push_back(Cyc::parse(t.get<std::string>()));
  return m;
}

}  // namespace anyonkit
