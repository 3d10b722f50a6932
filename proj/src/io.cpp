#include "permap/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace permap {

namespace {

using json = nlohmann::ordered_json;

json class_to_json(const CensusRecord& rec, const ClassLabel& c) {
    json vals = json::array();
    for (const Valency& v : c.tv.valencies)
        vals.push_back(json{{"num", v.num}, {"den", v.den}});
    return json{{"valencies", std::move(vals)}, {"power_class", power_class_index(rec, c.tv)}};
}

// One line per (g, n, orbit_genus) group; power_class ids are shared across
// the lines of a record.
void record_to_jsonl(std::ostream& os, const CensusRecord& rec) {
    std::map<Int, std::vector<const ClassLabel*>> by_orbit_genus;
    for (const ClassLabel& c : rec.classes)
        by_orbit_genus[c.orbit_genus].push_back(&c);
    for (const auto& [gp, group] : by_orbit_genus) {
        json line = {{"v", kSchemaVersion}, {"g", rec.genus}, {"n", rec.order}, {"orbit_genus", gp}};
        json classes = json::array();
        for (const ClassLabel* c : group)
            classes.push_back(class_to_json(rec, *c));
        line["classes"] = std::move(classes);
        os << line.dump() << '\n';
    }
}

} // namespace

std::string census_to_csv(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    os << "g,n,orbit_genus,class,power_class_id\n";
    for (const CensusRecord& rec : records)
        for (const ClassLabel& c : rec.classes)
            os << rec.genus << ',' << rec.order << ',' << c.orbit_genus << ',' << to_string(c.tv)
               << ',' << power_class_index(rec, c.tv) << '\n';
    return os.str();
}

std::string census_to_jsonl(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    for (const CensusRecord& rec : records)
        record_to_jsonl(os, rec);
    return os.str();
}

std::string census_to_text(const std::vector<CensusRecord>& records) {
    std::ostringstream os;
    for (const CensusRecord& rec : records) {
        os << "g=" << rec.genus << " n=" << rec.order << ": " << rec.classes.size() << " class"
           << (rec.classes.size() == 1 ? "" : "es") << ", " << rec.power_classes.size()
           << " power class" << (rec.power_classes.size() == 1 ? "" : "es") << '\n';
        for (const ClassLabel& c : rec.classes)
            os << "  [" << power_class_index(rec, c.tv) << "] " << to_string(c.tv)
               << "  g'=" << c.orbit_genus << '\n';
    }
    return os.str();
}

std::vector<CensusRecord> census_from_jsonl(const std::string& text) {
    struct PendingClass {
        ClassLabel label;
        Int power_id;
    };
    std::map<std::pair<Int, Int>, std::vector<PendingClass>> pending;

    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw std::invalid_argument("malformed census line: " + line);
        if (!j.contains("v") || j["v"].get<int>() != kSchemaVersion)
            throw std::invalid_argument("unsupported census schema version");
        Int g = j.at("g").get<Int>();
        Int n = j.at("n").get<Int>();
        Int gp = j.at("orbit_genus").get<Int>();
        for (const json& jc : j.at("classes")) {
            std::vector<Valency> vals;
            for (const json& jv : jc.at("valencies"))
                vals.push_back(Valency{jv.at("num").get<Int>(), jv.at("den").get<Int>()});
            PendingClass pc{ClassLabel{g, canonicalize(n, std::move(vals)), gp},
                            jc.at("power_class").get<Int>()};
            pending[{g, n}].push_back(std::move(pc));
        }
    }

    std::vector<CensusRecord> records;
    for (auto& [key, group] : pending) {
        CensusRecord rec{key.first, key.second, {}, {}};
        std::map<Int, std::vector<TotalValency>> orbits;
        for (PendingClass& pc : group) {
            orbits[pc.power_id].push_back(pc.label.tv);
            rec.classes.push_back(std::move(pc.label));
        }
        std::sort(rec.classes.begin(), rec.classes.end());
        for (auto& [id, members] : orbits) {
            std::sort(members.begin(), members.end());
            rec.power_classes.push_back(PowerClass{members.front(), std::move(members)});
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, Int genus) {
    return dir / ("census-g" + std::to_string(genus) + ".jsonl");
}

void write_cache(const std::filesystem::path& dir, Int genus, const std::vector<CensusRecord>& records) {
    std::filesystem::create_directories(dir);
    std::filesystem::path final_path = cache_file(dir, genus);
    std::filesystem::path tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream os(tmp_path, std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot write cache file " + tmp_path.string());
        nlohmann::ordered_json header = {{"permap_census", kSchemaVersion}, {"genus", genus}};
        os << header.dump() << '\n' << census_to_jsonl(records);
    }
    std::filesystem::rename(tmp_path, final_path);
}

std::optional<std::vector<CensusRecord>> read_cache(const std::filesystem::path& dir, Int genus) {
    std::ifstream is(cache_file(dir, genus));
    if (!is)
        return std::nullopt;
    std::string header_line;
    if (!std::getline(is, header_line))
        return std::nullopt;
    nlohmann::ordered_json header = nlohmann::ordered_json::parse(header_line, nullptr, false);
    if (header.is_discarded() || !header.contains("permap_census") ||
        header["permap_census"].get<int>() != kSchemaVersion || header.value("genus", Int{-1}) != genus)
        return std::nullopt;
    std::stringstream rest;
    rest << is.rdbuf();
    try {
        return census_from_jsonl(rest.str());
    } catch (const std::exception&) {
        return std::nullopt; // corrupt cache: treat as a miss
    }
}

std::string report_to_text(const CheckReport& report) {
    std::ostringstream os;
    os << "check " << report.check_name << " genus " << report.genus_lo << ".." << report.genus_hi
       << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
    for (const Witness& w : report.witnesses) {
        os << "  [" << (w.kind == WitnessKind::failure ? "FAIL" : "ok") << "] g=" << w.genus
           << " n=" << w.order << ' ' << to_string(w.tv);
        if (!w.note.empty())
            os << "  (" << w.note << ')';
        os << '\n';
    }
    return os.str();
}

std::string report_to_json(const CheckReport& report) {
    json j = {{"check", report.check_name},
              {"genus_lo", report.genus_lo},
              {"genus_hi", report.genus_hi},
              {"passed", report.passed}};
    json witnesses = json::array();
    for (const Witness& w : report.witnesses)
        witnesses.push_back(json{{"g", w.genus},
                                 {"n", w.order},
                                 {"class", to_string(w.tv)},
                                 {"kind", w.kind == WitnessKind::failure ? "failure" : "confirmation"},
                                 {"note", w.note}});
    j["witnesses"] = std::move(witnesses);
    return j.dump();
}

} // namespace permap
