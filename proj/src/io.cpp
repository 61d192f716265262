#include "cyclohecke/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclohecke {

using nlohmann::json;

namespace {

json terms_to_json(const TermMap& terms) {
    json arr = json::array();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        json t;
        t["exps"] = it->first.exps;
        t["perm"] = it->first.perm.images();
        t["num"] = it->second.get_num().get_str();
        t["den"] = it->second.get_den().get_str();
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

json spec_to_json(const CyclotomicSpec& spec) {
    json j;
    j["d"] = spec.d();
    j["l"] = spec.l();
    json coeffs = json::array();
    for (const auto& c : spec.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = std::move(coeffs);
    if (spec.roots()) {
        json roots = json::array();
        for (const auto& q : *spec.roots()) roots.push_back(to_string(q));
        j["roots"] = std::move(roots);
    }
    return j;
}

json element_to_json(const HeckeElement& e) {
    json j;
    j["spec"] = spec_to_json(*e.spec());
    j["terms"] = terms_to_json(e.terms());
    return j;
}

json graded_to_json(const GradedElement& e) {
    json j;
    j["d"] = e.d();
    j["l"] = e.l();
    j["terms"] = terms_to_json(e.terms());
    return j;
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json multipartition_to_json(const Multipartition& mp) {
    json arr = json::array();
    for (const auto& comp : mp.components()) arr.push_back(partition_to_json(comp));
    return arr;
}

json residues_to_json(const ResidueMultiset& r) {
    json arr = json::array();
    for (const auto& e : r.entries()) arr.push_back(to_string(e));
    return arr;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json blocks_report_json(const CyclotomicSpec& spec, const std::vector<BlockDescriptor>& blocks) {
    json j;
    j["spec"] = spec_to_json(spec);
    json arr = json::array();
    for (const auto& b : blocks) {
        json jb;
        jb["residues"] = residues_to_json(b.residues);
        json fiber = json::array();
        for (const auto& mp : b.fiber) fiber.push_back(multipartition_to_json(mp));
        jb["fiber"] = std::move(fiber);
        jb["center_dim"] = b.center_dimension;
        if (b.idempotent) jb["idempotent_terms"] = terms_to_json(b.idempotent->terms());
        arr.push_back(std::move(jb));
    }
    j["blocks"] = std::move(arr);
    return j;
}

Multipartition parse_multipartition(const std::string& text) {
    std::vector<Partition> comps;
    std::string buf;
    auto flush = [&]() {
        std::string t = buf;
        buf.clear();
        // strip optional parentheses
        if (!t.empty() && t.front() == '(') {
            if (t.back() != ')') throw std::invalid_argument("unbalanced '(' in multipartition");
            t = t.substr(1, t.size() - 2);
        }
        std::vector<int> parts;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t a = item.find_first_not_of(" \t");
            if (a == std::string::npos) continue;
            size_t b = item.find_last_not_of(" \t");
            parts.push_back(std::stoi(item.substr(a, b - a + 1)));
        }
        comps.push_back(Partition(std::move(parts)));
    };
    for (char c : text) {
        if (c == '|')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            buf += c;
    }
    flush();
    return Multipartition(std::move(comps));
}

}  // namespace cyclohecke
