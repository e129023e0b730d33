#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "salz/codec.hpp"
#include "salz/core.hpp"
#include "salz/decoder.hpp"
#include "salz/encoders.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_io = 3;
constexpr int exit_corrupt = 4;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw salz::IoError("cannot open " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) throw salz::IoError("read failed on " + path);
    return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw salz::IoError("cannot create " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw salz::IoError("write failed on " + path);
}

salz::Algorithm algo_from(const std::string& s) {
    if (s == "a1") return salz::Algorithm::A1;
    if (s == "a2") return salz::Algorithm::A2;
    if (s == "a3") return salz::Algorithm::A3;
    if (s == "bt") return salz::Algorithm::BT;
    throw salz::ContractViolation("unknown algorithm '" + s + "' (expected a1|a2|a3|bt)");
}

salz::TokenFormat format_from(const std::string& s) {
    if (s == "lz77") return salz::TokenFormat::LZ77;
    if (s == "lzss") return salz::TokenFormat::LZSS;
    throw salz::ContractViolation("unknown token format '" + s + "' (expected lz77|lzss)");
}

salz::ParseMode parse_from(const std::string& s) {
    if (s == "greedy") return salz::ParseMode::GreedyLongest;
    if (s == "first") return salz::ParseMode::FirstMatch;
    throw salz::ContractViolation("unknown parse mode '" + s + "' (expected greedy|first)");
}

double safe_bpb(std::uint64_t bytes, std::uint64_t bits) {
    return bytes == 0 ? 0.0 : salz::bpb(bytes, bits);
}

int run_compress(const std::string& in_path, const std::string& out_path,
                 const salz::EncoderConfig& cfg) {
    cfg.validate();
    const auto input = read_file(in_path);
    const auto result = salz::compress(input, cfg);
    write_file(out_path, result.container);

    const std::uint64_t payload_bytes =
        input.size() - std::min<std::uint64_t>(cfg.dict_len, input.size());
    std::printf("input bytes:     %zu\n", input.size());
    std::printf("output bytes:    %zu\n", result.container.size());
    std::printf("payload bpb:     %.3f\n", safe_bpb(payload_bytes, result.stats.output_bits));
    std::printf("container bpb:   %.3f\n",
                safe_bpb(input.size(), 8 * static_cast<std::uint64_t>(result.container.size())));
    std::printf("elapsed:         %.6f s\n", result.stats.elapsed_s);
    std::printf("structure bytes: %llu\n",
                static_cast<unsigned long long>(result.stats.structure_bytes));
    return 0;
}

int run_decompress(const std::string& in_path, const std::string& out_path) {
    const auto container = read_file(in_path);
    const auto output = salz::decode(container);
    write_file(out_path, output);
    std::printf("input bytes:  %zu\n", container.size());
    std::printf("output bytes: %zu\n", output.size());
    return 0;
}

int run_info(const std::string& in_path) {
    const auto container = read_file(in_path);
    const auto parsed = salz::parse_container(container);
    const auto& h = parsed.header;
    std::printf("algorithm:     %s\n", salz::to_string(h.algorithm));
    std::printf("token format:  %s\n", salz::to_string(h.token_format));
    std::printf("dict bytes:    %u\n", 1u << h.log2_dict);
    std::printf("lab bytes:     %u\n", 1u << h.log2_lab);
    std::printf("min match:     %u\n", static_cast<unsigned>(h.min_match));
    std::printf("original len:  %llu\n", static_cast<unsigned long long>(h.original_len));
    std::printf("stored dict:   %u\n", h.dict_stored_len);
    std::printf("payload bytes: %zu\n", parsed.payload.size());
    return 0;
}

struct BenchRow {
    std::string file;
    std::uint64_t size = 0;
    salz::EncoderConfig cfg;
    double time_s = 0.0;
    double payload_bpb = 0.0;
    double container_bpb = 0.0;
    std::uint64_t structure_bytes = 0;
};

int run_bench(const std::string& dir, bool csv, salz::TokenFormat format, salz::ParseMode parse,
              std::uint32_t min_match) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) throw salz::IoError("cannot read corpus directory " + dir + ": " + ec.message());
    if (files.empty()) throw salz::IoError("no corpus files in " + dir);
    std::sort(files.begin(), files.end());

    const std::pair<std::uint32_t, std::uint32_t> windows[] = {{256, 32}, {1024, 128}};
    const salz::Algorithm algos[] = {salz::Algorithm::A1, salz::Algorithm::A2,
                                     salz::Algorithm::A3, salz::Algorithm::BT};

    std::vector<BenchRow> rows;
    for (const auto& file : files) {
        const auto input = read_file(file.string());
        for (const auto& [dict, lab] : windows) {
            for (const auto algo : algos) {
                salz::EncoderConfig cfg;
                cfg.dict_len = dict;
                cfg.lab_len = lab;
                cfg.algorithm = algo;
                cfg.token_format = format;
                cfg.parse = parse;
                cfg.min_match = min_match;
                cfg.validate();
                const auto result = salz::compress(input, cfg);
                BenchRow row;
                row.file = file.filename().string();
                row.size = input.size();
                row.cfg = cfg;
                row.time_s = result.stats.elapsed_s;
                const std::uint64_t payload_bytes =
                    input.size() - std::min<std::uint64_t>(dict, input.size());
                row.payload_bpb = safe_bpb(payload_bytes, result.stats.output_bits);
                row.container_bpb = safe_bpb(
                    input.size(), 8 * static_cast<std::uint64_t>(result.container.size()));
                row.structure_bytes = result.stats.structure_bytes;
                rows.push_back(std::move(row));
            }
        }
    }

    if (csv) {
        std::printf(
            "file,size,algo,dict,lab,format,parse,time_s,payload_bpb,container_bpb,"
            "structure_bytes\n");
        for (const auto& r : rows)
            std::printf("%s,%llu,%s,%u,%u,%s,%s,%.6f,%.3f,%.3f,%llu\n", r.file.c_str(),
                        static_cast<unsigned long long>(r.size), salz::to_string(r.cfg.algorithm),
                        r.cfg.dict_len, r.cfg.lab_len, salz::to_string(r.cfg.token_format),
                        salz::to_string(r.cfg.parse), r.time_s, r.payload_bpb, r.container_bpb,
                        static_cast<unsigned long long>(r.structure_bytes));
    } else {
        std::printf("%-20s %10s %-4s %6s %5s %-5s %-6s %10s %8s %8s %10s\n", "file", "size",
                    "algo", "dict", "lab", "fmt", "parse", "time_s", "payload", "contnr",
                    "structure");
        for (const auto& r : rows)
            std::printf("%-20s %10llu %-4s %6u %5u %-5s %-6s %10.6f %8.3f %8.3f %10llu\n",
                        r.file.c_str(), static_cast<unsigned long long>(r.size),
                        salz::to_string(r.cfg.algorithm), r.cfg.dict_len, r.cfg.lab_len,
                        salz::to_string(r.cfg.token_format), salz::to_string(r.cfg.parse),
                        r.time_s, r.payload_bpb, r.container_bpb,
                        static_cast<unsigned long long>(r.structure_bytes));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-window dictionary compressor (suffix-array and tree encoders)"};
    app.require_subcommand(1);

    std::string in_path, out_path, corpus_dir;
    std::string algo = "a1", format = "lzss", parse = "greedy";
    std::uint32_t dict = 256, lab = 32, min_match = 2;
    bool csv = false;

    auto* cmd_compress = app.add_subcommand("compress", "compress a file into a salz container");
    cmd_compress->add_option("input", in_path, "file to compress")->required();
    cmd_compress->add_option("output", out_path, "container to write")->required();
    cmd_compress->add_option("--algo", algo, "encoder: a1|a2|a3|bt (default a1)");
    cmd_compress->add_option("--dict", dict, "dictionary bytes, power of two (default 256)");
    cmd_compress->add_option("--lab", lab, "look-ahead bytes, power of two (default 32)");
    cmd_compress->add_option("--format", format, "token format: lz77|lzss (default lzss)");
    cmd_compress->add_option("--parse", parse, "match selection: greedy|first (default greedy)");
    cmd_compress->add_option("--min-match", min_match, "shortest useful match (default 2)");

    auto* cmd_decompress =
        app.add_subcommand("decompress", "restore the original file from a container");
    cmd_decompress->add_option("input", in_path, "container to read")->required();
    cmd_decompress->add_option("output", out_path, "file to write")->required();

    auto* cmd_info = app.add_subcommand("info", "print container header fields");
    cmd_info->add_option("input", in_path, "container to inspect")->required();

    auto* cmd_bench =
        app.add_subcommand("bench", "run all encoders over a corpus directory at both "
                                    "reference window sizes");
    cmd_bench->add_option("corpus", corpus_dir, "directory with corpus files")->required();
    cmd_bench->add_flag("--csv", csv, "machine-readable output");
    cmd_bench->add_option("--format", format, "token format: lz77|lzss (default lzss)");
    cmd_bench->add_option("--parse", parse, "match selection: greedy|first (default greedy)");
    cmd_bench->add_option("--min-match", min_match, "shortest useful match (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (cmd_compress->parsed()) {
            salz::EncoderConfig cfg;
            cfg.dict_len = dict;
            cfg.lab_len = lab;
            cfg.algorithm = algo_from(algo);
            cfg.token_format = format_from(format);
            cfg.parse = parse_from(parse);
            cfg.min_match = min_match;
            return run_compress(in_path, out_path, cfg);
        }
        if (cmd_decompress->parsed()) return run_decompress(in_path, out_path);
        if (cmd_info->parsed()) return run_info(in_path);
        if (cmd_bench->parsed())
            return run_bench(corpus_dir, csv, format_from(format), parse_from(parse), min_match);
    } catch (const salz::ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const salz::CorruptStream& e) {
        std::cerr << "error: corrupt container: " << e.what() << "\n";
        return exit_corrupt;
    } catch (const salz::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}
