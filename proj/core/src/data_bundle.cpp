#include "modecert/data_bundle.hpp"

#include "modecert/sha256.hpp"

#include <fstream>
#include <sstream>

namespace modecert {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("missing data file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LineReader {
    std::string file;
    std::istringstream stream;
    int lineNo = 0;

    LineReader(const std::string& name, std::string contents) : file(name), stream(std::move(contents)) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(stream, line)) {
            ++lineNo;
            if (line.empty() || line[0] == '#') continue;
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw DataError(file + ":" + std::to_string(lineNo) + ": " + what);
    }
};

GaussianRational parseComplex(LineReader& r, const std::string& tok) {
    try {
        return GaussianRational::parse(tok);
    } catch (const std::exception& e) {
        r.fail(std::string("bad complex entry '") + tok + "': " + e.what());
    }
}

Rational parseRational(LineReader& r, const std::string& tok) {
    try {
        return Rational::parse(tok);
    } catch (const std::exception& e) {
        r.fail(std::string("bad rational entry '") + tok + "': " + e.what());
    }
}

long parseInt(LineReader& r, const std::string& tok) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        r.fail("bad integer entry '" + tok + "'");
    }
}

void verifyManifest(const std::string& dir, const std::map<std::string, std::string>& contents) {
    LineReader r("MANIFEST", readFile(dir + "/MANIFEST"));
    std::vector<std::string> toks;
    std::map<std::string, std::string> expected;
    while (r.next(toks)) {
        if (toks.size() != 2) r.fail("expected '<sha256> <file>'");
        expected[toks[1]] = toks[0];
    }
    for (const auto& [name, body] : contents) {
        auto it = expected.find(name);
        if (it == expected.end()) throw DataError("MANIFEST: no checksum recorded for " + name);
        std::string digest = sha256Hex(body);
        if (digest != it->second)
            throw DataError("checksum mismatch for " + name + ": file has " + digest);
    }
}

}  // namespace

const std::vector<GaussianRational>& DataBundle::partition(const std::string& name) const {
    auto it = partitions.find(name);
    if (it == partitions.end()) throw DataError("unknown partition " + name);
    return it->second;
}

std::vector<BoundarySubsegment> DataBundle::side(int side) const {
    std::vector<BoundarySubsegment> out;
    for (const auto& s : subsegments)
        if (s.side == side) out.push_back(s);
    return out;
}

DataBundle ingest(const std::string& dataDir) {
    const std::vector<std::string> files = {"approx_ga_ha.txt", "growth_tables.txt",
                                            "quasi_log_table.txt", "anchor_function.txt",
                                            "partitions.txt"};
    std::map<std::string, std::string> contents;
    for (const auto& f : files) contents[f] = readFile(dataDir + "/" + f);
    verifyManifest(dataDir, contents);

    DataBundle bundle;

    {
        LineReader r("approx_ga_ha.txt", contents["approx_ga_ha.txt"]);
        std::vector<std::string> toks;
        while (r.next(toks)) {
            if (toks.size() != 4) r.fail("expected '<piece> <tpow> <lampow> <re>,<im>'");
            BivarPoly* target = nullptr;
            if (toks[0] == "G1") target = &bundle.g1;
            else if (toks[0] == "G2") target = &bundle.g2;
            else if (toks[0] == "H1") target = &bundle.h1;
            else if (toks[0] == "H2") target = &bundle.h2;
            else r.fail("unknown piece '" + toks[0] + "'");
            long tp = parseInt(r, toks[1]);
            long lp = parseInt(r, toks[2]);
            if (tp < 0 || lp < 0) r.fail("negative power");
            target->setCoefficient(static_cast<size_t>(tp), static_cast<size_t>(lp),
                                   parseComplex(r, toks[3]));
        }
        if (bundle.g1.isZero() || bundle.g2.isZero() || bundle.h1.isZero() || bundle.h2.isZero())
            r.fail("one of the pieces G1/G2/H1/H2 is missing");
    }

    {
        LineReader r("growth_tables.txt", contents["growth_tables.txt"]);
        std::vector<std::string> toks;
        bundle.tableJ.assign(31, Rational(0));
        bundle.tableM.assign(31, Rational(0));
        std::vector<bool> haveJ(31, false), haveM(31, false);
        while (r.next(toks)) {
            if (toks.size() != 3) r.fail("expected '<J|M|P> <n> <value>'");
            long n = parseInt(r, toks[1]);
            if (toks[0] == "J" || toks[0] == "M") {
                if (n < 0 || n > 30) r.fail("index out of range");
                // table values are printed scaled by 10^7
                Rational v = parseRational(r, toks[2]) / Rational::scaled(1, 7);
                (toks[0] == "J" ? bundle.tableJ : bundle.tableM)[n] = v;
                (toks[0] == "J" ? haveJ : haveM)[n] = true;
            } else if (toks[0] == "P") {
                if (n < 10 || n > 30) r.fail("ratio-bound index out of range");
                bundle.tableP[static_cast<int>(n)] = parseRational(r, toks[2]);
            } else {
                r.fail("unknown row tag '" + toks[0] + "'");
            }
        }
        for (int n = 0; n <= 30; ++n)
            if (!haveJ[n] || !haveM[n]) r.fail("missing J/M row " + std::to_string(n));
        for (int n = 10; n <= 29; ++n)
            if (!bundle.tableP.count(n)) r.fail("missing P row " + std::to_string(n));
    }

    {
        LineReader r("quasi_log_table.txt", contents["quasi_log_table.txt"]);
        std::vector<std::string> toks;
        size_t count = 0;
        while (r.next(toks)) {
            if (toks.size() != 5) r.fail("expected '<a|b> <1|2> <n> <i> <re>,<im>'");
            QuasiLogTable::Block* block = nullptr;
            if (toks[0] == "a") block = &bundle.quasiLog.lower;
            else if (toks[0] == "b") block = &bundle.quasiLog.upper;
            else r.fail("unknown table tag '" + toks[0] + "'");
            long variant = parseInt(r, toks[1]);
            long n = parseInt(r, toks[2]);
            long i = parseInt(r, toks[3]);
            if (variant < 1 || variant > 2 || n < 1 || n > 50 || i < 0 || i > 5)
                r.fail("index out of range");
            (*block)[variant - 1][n][i] = parseComplex(r, toks[4]);
            ++count;
        }
        if (count != 2ul * 2 * 50 * 6) r.fail("incomplete quasi-log table");
    }

    {
        LineReader r("anchor_function.txt", contents["anchor_function.txt"]);
        std::vector<std::string> toks;
        std::vector<RationalFunctionForm::Pole> qPoles, rPoles;
        while (r.next(toks)) {
            if (toks[0] == "poly") {
                if (toks.size() != 3) r.fail("expected 'poly <k> <coeff>'");
                long k = parseInt(r, toks[1]);
                std::vector<GaussianRational> c = bundle.anchorF.poly.coeffs();
                if (c.size() <= static_cast<size_t>(k)) c.resize(k + 1, GaussianRational(0));
                c[k] = parseComplex(r, toks[2]);
                bundle.anchorF.poly = UPoly(std::move(c));
            } else if (toks[0] == "pole") {
                if (toks.size() != 4) r.fail("expected 'pole <q|r> <loc> <res>'");
                RationalFunctionForm::Pole p{GaussianRational(parseRational(r, toks[2])),
                                             GaussianRational(parseRational(r, toks[3]))};
                if (toks[1] == "q") qPoles.push_back(p);
                else if (toks[1] == "r") rPoles.push_back(p);
                else r.fail("unknown pole tag");
            } else {
                r.fail("unknown row tag '" + toks[0] + "'");
            }
        }
        if (qPoles.size() != 2 || rPoles.size() != 17) r.fail("expected 2 head poles and 17 root poles");
        bundle.anchorQPoleCount = qPoles.size();
        for (auto& p : qPoles) bundle.anchorF.poles.push_back(std::move(p));
        for (auto& p : rPoles) bundle.anchorF.poles.push_back(std::move(p));
    }

    {
        LineReader r("partitions.txt", contents["partitions.txt"]);
        std::vector<std::string> toks;
        while (r.next(toks)) {
            if (toks[0] == "P") {
                if (toks.size() != 3) r.fail("expected 'P <name> <re>,<im>'");
                bundle.partitions[toks[1]].push_back(parseComplex(r, toks[2]));
            } else if (toks[0] == "L") {
                if (toks.size() != 5) r.fail("expected 'L <side> <j> <from> <to>'");
                BoundarySubsegment s;
                s.side = static_cast<int>(parseInt(r, toks[1]));
                s.index = static_cast<int>(parseInt(r, toks[2]));
                s.from = parseComplex(r, toks[3]);
                s.to = parseComplex(r, toks[4]);
                if (s.side < 1 || s.side > 6) r.fail("side out of range");
                bundle.subsegments.push_back(std::move(s));
            } else {
                r.fail("unknown row tag '" + toks[0] + "'");
            }
        }
        for (const char* name : {"P1", "P2", "P3", "P4", "PF"})
            if (!bundle.partitions.count(name)) r.fail(std::string("missing partition ") + name);
        if (bundle.side(1).size() != 4 || bundle.side(2).size() != 4 || bundle.side(5).size() != 1 ||
            bundle.side(6).size() != 1)
            r.fail("unexpected subsegment layout");
    }

    return bundle;
}

}  // namespace modecert
