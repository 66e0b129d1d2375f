#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "cmgen/cmgen.hpp"

namespace cmgen::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::uint64_t seed = 1;
    std::string out;
    TrainerConfig trainer;
    std::size_t radius = 5;
    std::size_t k = 0;  // 0: per-subcommand default
    bool exclude_input = false;
    bool verbs_only = false;
    bool frames_only = false;
    bool signed_rel = false;
    std::string level = "interval";
    std::string table;
    std::string embeddings;
    std::vector<std::string> inputs;
};

/// Opens `path` for reading; "-" is standard input.
class Input {
public:
    explicit Input(const std::string& path) {
        if (path == "-") return;
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) throw Error("cannot open '" + path + "'");
    }
    std::istream& stream() { return file_ ? *file_ : std::cin; }

private:
    std::unique_ptr<std::ifstream> file_;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << content;
    if (!f) throw Error("failed writing '" + path + "'");
}

void require_inputs(const Options& o, std::size_t n, const char* what) {
    if (o.inputs.size() != n) throw UsageError(std::string("expected ") + what);
}

void cmd_prepare(const Options& o, std::ostream& out) {
    require_inputs(o, 1, "one FTC1 input");
    Input in(o.inputs[0]);
    const auto parsed = parse_ftc(in.stream());
    if (!parsed.errors.empty()) {
        std::string msg = std::to_string(parsed.errors.size()) + " invalid record(s)";
        for (const auto& e : parsed.errors) msg += "\n  line " + std::to_string(e.line) + ": " + e.message;
        throw ParseError(msg);
    }
    for (const auto& s : parsed.sentences) {
        const auto window = extract_window(s, o.radius);
        out << format_window(substitute_frame_label(window, s.frame_label)) << '\n';
        if (o.frames_only) continue;
        // The lemma-centred copy puts verbs and frames into one space, which generation needs.
        auto lemma_window = window;
        lemma_window.center = s.focus_lemma;
        out << format_window(lemma_window) << '\n';
    }
}

void cmd_train(const Options& o, std::ostream& out) {
    require_inputs(o, 1, "one window file");
    Input in(o.inputs[0]);
    const auto windows = read_windows(in.stream());
    auto config = o.trainer;
    config.seed = o.seed;
    config.validate();
    auto vocab = build_vocab(windows, config.min_count);
    const auto space = train<double>(windows, std::move(vocab), config);
    save_embeddings(space, out);
}

EmbeddingSpace<double> read_space(const std::string& path) {
    Input in(path);
    return load_embeddings<double>(in.stream());
}

FrameInventory read_inventory(const std::string& path) {
    Input in(path);
    return load_inventory(in.stream());
}

void cmd_eval_frames(const Options& o, std::ostream& out) {
    require_inputs(o, 2, "EMB1 and FIV1 inputs");
    const auto space = read_space(o.inputs[0]);
    const auto inv = read_inventory(o.inputs[1]);
    MetricConfig config;
    config.seed = derive_seed(o.seed, "frame_metrics");
    config.verbs_only = o.verbs_only;
    if (o.k) config.sample_size = o.k;
    write_report(evaluate_space(space, inv, config), out);
}

void cmd_generate(const Options& o, std::ostream& out) {
    require_inputs(o, 1, "one request file");
    if (o.embeddings.empty()) throw UsageError("--embeddings is required");
    const auto space = read_space(o.embeddings);
    Input in(o.inputs[0]);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in.stream(), line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = detail::split(line, '\t');
        if (fields.size() != 7) throw ParseError(lineno, "expected FTC1 fields plus target and source frames");
        GenerationRequest req;
        try {
            req.sentence = parse_ftc_record(detail::join({fields.begin(), fields.begin() + 5}, "\t"));
        } catch (const ArgumentError& e) {
            throw ParseError(lineno, e.what());
        }
        req.target_frame = fields[5];
        req.source_frame = fields[6];
        req.candidates_k = o.k ? o.k : 10;
        req.exclude_input = o.exclude_input;
        const auto result = generate(req, space);
        std::vector<std::string> cands;
        for (const auto& c : result.candidates) cands.push_back(c.token);
        out << req.sentence.text() << '\t' << result.text() << '\t' << detail::join(cands, ",") << '\n';
    }
}

void cmd_select_mappings(const Options& o, std::ostream& out) {
    require_inputs(o, 2, "mapping table and FIV1 inputs");
    MappingFrequencyTable table;
    {
        Input in(o.inputs[0]);
        table = load_mapping_table(in.stream());
    }
    const auto inv = read_inventory(o.inputs[1]);
    std::set<std::string> targets;
    for (const auto& [key, _] : table.counts) targets.insert(key.first);
    out << "target\trare\tunseen\n";
    for (const auto& target : targets) {
        Rng rare_rng(derive_seed(o.seed, "select/rare/" + target));
        Rng unseen_rng(derive_seed(o.seed, "select/unseen/" + target));
        std::string unseen = "-";
        try {
            unseen = select_unseen_mapping(table, inv, target, unseen_rng);
        } catch (const ExhaustedError&) {
        }
        out << target << '\t' << select_rare_mapping(table, target, rare_rng) << '\t' << unseen << '\n';
    }
}

void cmd_eval_metrics(const Options& o, std::ostream& out) {
    require_inputs(o, 1, "one SEB1 input");
    Input in(o.inputs[0]);
    const auto rows = load_seb(in.stream());
    const auto triples = assemble_triples(rows);
    write_report(aggregate_report(triples, o.signed_rel), out);
}

void cmd_agreement(const Options& o, std::ostream& out) {
    require_inputs(o, 1, "one annotation matrix");
    const auto level = parse_level(o.level);
    if (!level) throw UsageError("unknown level '" + o.level + "'");
    Input in(o.inputs[0]);
    char buf[64];
    std::snprintf(buf, sizeof buf, "alpha\t%.6f\n", krippendorff_alpha(load_annotation_matrix(in.stream()), *level));
    out << buf;
}

void cmd_emit_records(const Options& o, std::ostream& out, std::string& table_out) {
    require_inputs(o, 1, "one PFC1 input");
    Input in(o.inputs[0]);
    const auto pairs = parse_pfc(in.stream());
    for (const auto& p : pairs) out << emit_control_record(p) << '\n';
    std::ostringstream t;
    save_mapping_table(build_mapping_table(pairs), t);
    table_out = t.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Metaphoric verb generation from frame-embedding mappings", "cmgen"};
    app.require_subcommand(1);
    Options o;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Seed for every stochastic step");
        sub->add_option("--out", o.out, "Output path (default: standard output)");
    };
    auto* prepare = app.add_subcommand("prepare", "FTC1 -> frame-substituted training windows");
    prepare->add_option("--radius", o.radius, "Context tokens kept on each side")->check(CLI::PositiveNumber);
    prepare->add_flag("--frames-only", o.frames_only, "Emit only frame-substituted windows, no lemma-centred copies");
    auto* train_cmd = app.add_subcommand("train", "Windows -> EMB1 embeddings");
    train_cmd->add_option("--dim", o.trainer.dim, "Embedding dimension")->check(CLI::PositiveNumber);
    train_cmd->add_option("--epochs", o.trainer.epochs, "Training epochs");
    train_cmd->add_option("--negatives", o.trainer.negatives, "Negative samples per positive")->check(CLI::PositiveNumber);
    train_cmd->add_option("--min-count", o.trainer.min_count, "Drop word tokens rarer than this");
    train_cmd->add_option("--threads", o.trainer.threads, "Worker threads (>1 is nondeterministic)")->check(CLI::PositiveNumber);
    train_cmd->add_option("--lr", o.trainer.learning_rate, "Initial learning rate");
    train_cmd->add_option("--window", o.trainer.window, "Skip-gram radius")->check(CLI::PositiveNumber);
    train_cmd->add_option("--subsample", o.trainer.subsample, "Frequent-word subsampling threshold (0 disables)");
    auto* eval_frames = app.add_subcommand("eval-frames", "EMB1 + FIV1 -> lex/str report");
    eval_frames->add_flag("--verbs-only", o.verbs_only, "Only verbal lexical units");
    auto* gen = app.add_subcommand("generate", "EMB1 + request batch -> metaphoric substitutions");
    gen->add_option("--embeddings", o.embeddings, "EMB1 file")->required();
    gen->add_flag("--exclude-input", o.exclude_input, "Never return the input verb");
    auto* select = app.add_subcommand("select-mappings", "Mapping table + FIV1 -> rare/unseen source frames");
    auto* eval_metrics = app.add_subcommand("eval-metrics", "SEB1 triples -> dis/rel/exact-match report");
    eval_metrics->add_flag("--signed-rel", o.signed_rel, "Signed instead of absolute rel");
    auto* agreement = app.add_subcommand("agreement", "Annotation matrix -> Krippendorff's alpha");
    agreement->add_option("--level", o.level, "interval|ordinal|nominal")
        ->check(CLI::IsMember({"interval", "ordinal", "nominal"}));
    auto* emit = app.add_subcommand("emit-records", "PFC1 -> control records + mapping table");
    emit->add_option("--table", o.table, "Write the mapping-frequency table here");

    for (auto* sub : {prepare, train_cmd, eval_frames, gen, select, eval_metrics, agreement, emit}) {
        common(sub);
        sub->add_option("inputs", o.inputs, "Input files ('-' for standard input)");
    }
    for (auto* sub : {eval_frames, gen}) sub->add_option("--k", o.k, "Sample size / candidate count")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "cmgen: " << e.what() << '\n';
        return 2;
    }

    try {
        std::ostringstream buffer;
        std::string table;
        if (prepare->parsed()) cmd_prepare(o, buffer);
        else if (train_cmd->parsed()) cmd_train(o, buffer);
        else if (eval_frames->parsed()) cmd_eval_frames(o, buffer);
        else if (gen->parsed()) cmd_generate(o, buffer);
        else if (select->parsed()) cmd_select_mappings(o, buffer);
        else if (eval_metrics->parsed()) cmd_eval_metrics(o, buffer);
        else if (agreement->parsed()) cmd_agreement(o, buffer);
        else if (emit->parsed()) cmd_emit_records(o, buffer, table);

        if (!o.table.empty()) write_file(o.table, table);
        if (o.out.empty()) out << buffer.str();
        else write_file(o.out, buffer.str());
    } catch (const UsageError& e) {
        err << "cmgen: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "cmgen: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace cmgen::cli
