#include "uglov/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace uglov {

Json to_json(const Bipartition& bp) {
    return Json{{"c1", bp.first().parts()}, {"c2", bp.second().parts()}};
}

Json to_json(const Charge& charge) { return Json::array({charge.s1, charge.s2}); }

Json to_json(const ExtNode& node) { return Json::array({node.row, node.col, static_cast<int>(node.comp)}); }

Json to_json(const FockVector& v) {
    Json out = Json::array();
    for (const auto& [bp, coeff] : v.terms()) out.push_back(Json{{"bp", to_json(bp)}, {"coeff", coeff}});
    return out;
}

Json to_json(const MovePath& path) {
    Json out = Json::array();
    for (ChargeMove m : path.moves()) out.push_back(to_string(m));
    return out;
}

Json to_json(const DjmReport& report) {
    Json out{{"bp", to_json(report.bp)}, {"adm", report.adm}, {"expansion", to_json(report.expansion)}};
    out["max"] = report.max ? to_json(*report.max) : Json(nullptr);
    out["pass"] = report.pass;
    if (!report.message.empty()) out["message"] = report.message;
    return out;
}

Json to_json(const ConverseReport& report) {
    Json examples = Json::array();
    for (const auto& c : report.counterexamples) examples.push_back(Json{{"word", c.word}, {"max", to_json(c.max)}});
    return Json{{"rank", report.rank},
                {"words", report.words_checked},
                {"nonzero_words", report.nonzero_words},
                {"distinct_maxima", report.maxima.size()},
                {"maxima_cover_uglov", report.maxima_cover_uglov},
                {"counterexamples", examples},
                {"pass", report.pass()}};
}

Json to_json(const CorollaryReport& report) {
    Json shapes = Json::array();
    for (const Bipartition& mu : report.shapes) shapes.push_back(to_json(mu));
    Json out{{"bp", to_json(report.bp)}, {"adm", report.adm}, {"shapes", shapes}, {"pass", report.pass}};
    if (!report.message.empty()) out["message"] = report.message;
    return out;
}

Json to_json(const PropbReport& report) {
    Json eta = Json::array();
    for (const ExtNode& node : report.eta) eta.push_back(to_json(node));
    Json out{{"bp", to_json(report.bp)}, {"residue", report.residue}, {"eta", eta}, {"pass", report.pass}};
    if (!report.message.empty()) out["message"] = report.message;
    return out;
}

Bipartition bipartition_from_json(const Json& j) {
    return Bipartition(Partition(j.at("c1").get<std::vector<int>>()), Partition(j.at("c2").get<std::vector<int>>()));
}

std::string join_residues(const ResidueSeq& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

std::string render_nature_table(const Bipartition& bp, const NatureTable& table) {
    std::vector<std::string> comps{"Component"}, conts{"Content"}, natures{to_string(bp)};
    for (const NatureEntry& entry : table.entries()) {
        comps.push_back(std::to_string(static_cast<int>(entry.node.comp)));
        conts.push_back(std::to_string(content(entry.node, table.charge())));
        natures.push_back(to_string(entry.nature));
    }
    std::vector<std::size_t> width(comps.size(), 0);
    for (const auto* row : {&comps, &conts, &natures})
        for (std::size_t i = 0; i < row->size(); ++i) width[i] = std::max(width[i], (*row)[i].size());

    std::ostringstream out;
    for (const auto* row : {&comps, &conts, &natures}) {
        for (std::size_t i = 0; i < row->size(); ++i) {
            const std::string& cell = (*row)[i];
            if (i == 0) {
                out << cell << std::string(width[i] - cell.size(), ' ') << " |";
            } else {
                out << ' ' << std::string(width[i] - cell.size(), ' ') << cell;
            }
        }
        out << '\n';
    }
    return out.str();
}

Json nature_table_json(const NatureTable& table) {
    Json comps = Json::array(), conts = Json::array(), natures = Json::array();
    for (const NatureEntry& entry : table.entries()) {
        comps.push_back(static_cast<int>(entry.node.comp));
        conts.push_back(content(entry.node, table.charge()));
        natures.push_back(to_string(entry.nature));
    }
    return Json{{"window", Json::array({table.window().lo, table.window().hi})},
                {"component", comps},
                {"content", conts},
                {"nature", natures}};
}

void write_crystal_dot(std::ostream& out, int n, const CrystalParams& p) {
    const auto layers = enumerate_uglov_layers(n, p);
    out << "digraph crystal {\n";
    out << "  // e=" << to_string(p.e) << " s=(" << p.charge.s1 << "," << p.charge.s2 << ")\n";
    for (const auto& layer : layers)
        for (const Bipartition& bp : layer) out << "  \"" << to_string(bp) << "\";\n";
    for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
        for (const Bipartition& bp : layers[k]) {
            for (int j : candidate_residues(bp, p)) {
                const auto node = good_addable_node(bp, j, p);
                if (!node) continue;
                out << "  \"" << to_string(bp) << "\" -> \"" << to_string(add_node(bp, *node)) << "\" [label=\"" << j
                    << "\"];\n";
            }
        }
    }
    out << "}\n";
}

}  // namespace uglov
