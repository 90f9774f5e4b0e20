#include "kites/report.hpp"

#include <sstream>

#include "json.hpp"

namespace kites {

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& r : records) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.mode;
        if (r.space > 0)
            os << " " << r.checked << "/" << r.space;
        else if (r.checked > 0)
            os << " " << r.checked;
        os << "]";
        if (!r.witness.empty()) os << "  witness: " << r.witness;
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << "  " << title;
    if (truncated) os << "  [truncated by budget]";
    os << "\n";
    return os.str();
}

std::string Report::to_records() const {
    std::ostringstream os;
    {
        nlohmann::ordered_json head;
        head["record"] = "report";
        head["title"] = title;
        head["pass"] = pass();
        head["truncated"] = truncated;
        head["checks"] = static_cast<long long>(records.size());
        os << head.dump() << "\n";
    }
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["record"] = "check";
        j["name"] = r.name;
        j["mode"] = r.mode;
        j["checked"] = r.checked;
        j["space"] = r.space;
        j["pass"] = r.pass;
        j["witness"] = r.witness;
        j["note"] = r.note;
        os << j.dump() << "\n";
    }
    return os.str();
}

}  // namespace kites
