#include "removal/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace removal {

namespace {

std::uint64_t parse_u64(const std::string& tok, int line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a nonnegative integer, got '" + tok + "'", line);
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError("integer out of range: '" + tok + "'", line);
    }
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int line_no = 0;

    // header
    std::optional<GroupParams> params;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        std::string magic, version, ptok, ntok;
        hs >> magic >> version >> ptok >> ntok;
        if (magic != "fpn" || version != "v1" || ptok.rfind("p=", 0) != 0 ||
            ntok.rfind("n=", 0) != 0)
            throw ParseError("expected header 'fpn v1 p=<p> n=<n>'", line_no);
        std::uint64_t p = parse_u64(ptok.substr(2), line_no);
        std::uint64_t n = parse_u64(ntok.substr(2), line_no);
        try {
            params.emplace(static_cast<unsigned>(p), static_cast<unsigned>(n));
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line_no);
        }
        break;
    }
    if (!params) throw ParseError("missing header", line_no == 0 ? 1 : line_no);

    std::optional<PointSet> sx, sy, sz;
    std::vector<Triangle> triples;
    bool has_triples = false;

    auto read_points = [&](std::istringstream& ls, PointSet& target, int ln) {
        std::string tok;
        while (ls >> tok) {
            Point a = parse_u64(tok, ln);
            if (a >= params->order()) throw ParseError("point index out of range", ln);
            target.insert(a);
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "X:" || tag == "Y:" || tag == "Z:") {
            if (has_triples) throw ParseError("set line after T: lines", line_no);
            auto& slot = tag == "X:" ? sx : tag == "Y:" ? sy : sz;
            if (!slot) slot.emplace(*params);
            read_points(ls, *slot, line_no);
        } else if (tag == "T:") {
            if (sx || sy || sz) throw ParseError("T: line after set lines", line_no);
            has_triples = true;
            std::string xt, yt, zt, extra;
            if (!(ls >> xt >> yt >> zt)) throw ParseError("T: needs three indices", line_no);
            if (ls >> extra) throw ParseError("T: takes exactly three indices", line_no);
            Point x = parse_u64(xt, line_no), y = parse_u64(yt, line_no),
                  z = parse_u64(zt, line_no);
            if (x >= params->order() || y >= params->order() || z >= params->order())
                throw ParseError("point index out of range", line_no);
            if (params->add(params->add(x, y), z) != 0)
                throw ParseError("triple does not sum to zero", line_no);
            triples.push_back(Triangle{x, y, z});
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }

    if (has_triples) return MatchedTriples{*params, std::move(triples), false};
    if (!sx && !sy && !sz)
        throw ParseError("instance has neither set lines nor T: lines", line_no + 1);
    if (!sx) sx.emplace(*params);
    if (!sy) sy.emplace(*params);
    if (!sz) sz.emplace(*params);
    return TripleSystem(*params, std::move(*sx), std::move(*sy), std::move(*sz));
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    return parse_instance(in);
}

TripleSystem load_system(const std::string& path) {
    Instance inst = load_instance(path);
    if (auto* sys = std::get_if<TripleSystem>(&inst)) return std::move(*sys);
    // A matched file also describes a system on its coordinate sets.
    return system_from(std::get<MatchedTriples>(inst));
}

MatchedTriples load_matched(const std::string& path) {
    Instance inst = load_instance(path);
    if (auto* m = std::get_if<MatchedTriples>(&inst)) return std::move(*m);
    throw ValidationError("expected a matched-collection file (T: lines): " + path);
}

namespace {

std::string header_of(const GroupParams& g) {
    return "fpn v1 p=" + std::to_string(g.p()) + " n=" + std::to_string(g.n());
}

void append_points(std::string& out, const char* tag, const PointSet& s) {
    out += tag;
    for (Point a : s.members()) {
        out += ' ';
        out += std::to_string(a);
    }
    out += '\n';
}

}  // namespace

std::string format_system(const TripleSystem& sys) {
    std::string out = header_of(sys.params) + "\n";
    append_points(out, "X:", sys.X);
    append_points(out, "Y:", sys.Y);
    append_points(out, "Z:", sys.Z);
    return out;
}

std::string format_matched(const MatchedTriples& m) {
    std::string out = header_of(m.params) + "\n";
    for (const Triangle& t : m.triples) {
        out += "T: " + std::to_string(t.x) + ' ' + std::to_string(t.y) + ' ' +
               std::to_string(t.z) + '\n';
    }
    return out;
}

void save_system(const TripleSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << format_system(sys);
}

void save_matched(const MatchedTriples& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << format_matched(m);
}

}  // namespace removal
