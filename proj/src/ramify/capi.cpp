#include "ramify.h"

#include <cstring>
#include <variant>

#include "ramify/barcode_io.hpp"
#include "ramify/demo.hpp"
#include "ramify/distance.hpp"
#include "ramify/forest.hpp"

using namespace ramify;

// --- handle definitions -------------------------------------------------------

struct ramify_complex_s {
    std::shared_ptr<const FilteredComplex> complex;
};

struct ramify_barcode_s {
    FieldSpec field;
    std::variant<Barcode<Rational>, Barcode<Zp>> barcode;
    std::vector<BarView> views;
    std::shared_ptr<const FilteredComplex> complex;
};

struct ramify_matroid_s {
    FilteredMatroid matroid;
};

struct ramify_forest_s {
    RamificationForest forest;
};

struct ramify_distmat_s {
    DistanceMatrix matrix;
};

// --- error plumbing -------------------------------------------------------------

namespace {

thread_local std::string t_last_error;

template <class Fn>
ramify_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        t_last_error.clear();
        return RAMIFY_OK;
    } catch (const ParseError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_PARSE;
    } catch (const ClosureError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_CLOSURE;
    } catch (const NotACycleError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_NOT_A_CYCLE;
    } catch (const UnknownIdError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_UNKNOWN_ID;
    } catch (const IndependentSetError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_INDEPENDENT_SET;
    } catch (const IoError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_IO;
    } catch (const InvalidArgumentError& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return RAMIFY_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return RAMIFY_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) throw InvalidArgumentError(what);
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

FieldSpec field_from_prime(int64_t p) {
    FieldSpec f{p};
    validate_field(f);
    return f;
}

ElementSet ids_to_set(const size_t* ids, size_t n) {
    require(ids != nullptr || n == 0, "id array is null");
    ElementSet s(ids, ids + n);
    return s;
}

}  // namespace

extern "C" {

const char* ramify_version(void) { return "1.0.0"; }

const char* ramify_last_error(void) { return t_last_error.c_str(); }

void ramify_string_free(char* s) { delete[] s; }

// --- complexes ---------------------------------------------------------------

ramify_status ramify_complex_rips(const double* coords, size_t n_points, size_t dim, int max_dim,
                                  double max_scale, ramify_complex** out) {
    return guarded([&] {
        require(out && coords, "null argument");
        PointCloud cloud;
        cloud.points.resize(n_points);
        for (size_t i = 0; i < n_points; ++i)
            cloud.points[i].assign(coords + i * dim, coords + (i + 1) * dim);
        *out = new ramify_complex_s{
            std::make_shared<FilteredComplex>(build_vietoris_rips(cloud, max_dim, max_scale))};
    });
}

ramify_status ramify_complex_cech(const double* coords, size_t n_points, size_t dim, int max_dim,
                                  double max_scale, ramify_complex** out) {
    return guarded([&] {
        require(out && coords, "null argument");
        PointCloud cloud;
        cloud.points.resize(n_points);
        for (size_t i = 0; i < n_points; ++i)
            cloud.points[i].assign(coords + i * dim, coords + (i + 1) * dim);
        *out = new ramify_complex_s{std::make_shared<FilteredComplex>(build_cech(cloud, max_dim, max_scale))};
    });
}

ramify_status ramify_complex_clique(const int64_t* edges, size_t n_edges, const int64_t* extra_vertices,
                                    size_t n_extra_vertices, int max_dim, ramify_complex** out) {
    return guarded([&] {
        require(out, "null argument");
        require(edges != nullptr || n_edges == 0, "edge array is null");
        require(extra_vertices != nullptr || n_extra_vertices == 0, "vertex array is null");
        Graph g;
        for (size_t i = 0; i < n_edges; ++i) g.edges.emplace_back(edges[2 * i], edges[2 * i + 1]);
        for (size_t i = 0; i < n_extra_vertices; ++i) g.vertices.push_back(extra_vertices[i]);
        *out = new ramify_complex_s{std::make_shared<FilteredComplex>(clique_complex(g, max_dim))};
    });
}

ramify_status ramify_complex_nerve(const int64_t* members, const size_t* offsets, size_t n_sets, int max_dim,
                                   ramify_complex** out) {
    return guarded([&] {
        require(out && offsets, "null argument");
        std::vector<std::vector<VertexId>> cover(n_sets);
        for (size_t i = 0; i < n_sets; ++i) {
            require(offsets[i] <= offsets[i + 1], "cover offsets must be non-decreasing");
            cover[i].assign(members + offsets[i], members + offsets[i + 1]);
        }
        *out = new ramify_complex_s{std::make_shared<FilteredComplex>(nerve(cover, max_dim))};
    });
}

ramify_status ramify_complex_load(const char* path, ramify_complex** out) {
    return guarded([&] {
        require(out && path, "null argument");
        *out = new ramify_complex_s{std::make_shared<FilteredComplex>(load_filtration(path))};
    });
}

ramify_status ramify_complex_build_file(const char* kind, const char* path, int max_dim, double max_scale,
                                        ramify_complex** out) {
    return guarded([&] {
        require(kind && path && out, "null argument");
        std::string k(kind);
        FilteredComplex complex;
        if (k == "rips") {
            complex = build_vietoris_rips(load_point_cloud(path), max_dim, max_scale);
        } else if (k == "cech") {
            complex = build_cech(load_point_cloud(path), max_dim, max_scale);
        } else if (k == "clique") {
            complex = clique_complex(load_graph(path), max_dim);
        } else if (k == "nerve") {
            complex = nerve(load_cover(path), max_dim);
        } else {
            throw InvalidArgumentError("unknown complex kind '" + k + "' (rips, cech, clique, nerve)");
        }
        *out = new ramify_complex_s{std::make_shared<FilteredComplex>(std::move(complex))};
    });
}

ramify_status ramify_complex_save(const ramify_complex* c, const char* path) {
    return guarded([&] {
        require(c && path, "null argument");
        save_filtration(*c->complex, path);
    });
}

ramify_status ramify_complex_format(const ramify_complex* c, char** out_text) {
    return guarded([&] {
        require(c && out_text, "null argument");
        *out_text = copy_string(format_filtration(*c->complex));
    });
}

ramify_status ramify_complex_demo(const char* name, ramify_complex** out) {
    return guarded([&] {
        require(out && name, "null argument");
        if (std::string(name) == "triangle") {
            *out = new ramify_complex_s{std::make_shared<FilteredComplex>(triangle_demo_filtration())};
        } else {
            throw InvalidArgumentError("unknown demo complex '" + std::string(name) + "' (available: triangle)");
        }
    });
}

size_t ramify_complex_size(const ramify_complex* c) { return c ? c->complex->size() : 0; }

int ramify_complex_top_dim(const ramify_complex* c) { return c ? c->complex->top_dimension() : -1; }

size_t ramify_complex_count_dim(const ramify_complex* c, int dim) {
    return c ? c->complex->count_dimension(dim) : 0;
}

size_t ramify_complex_critical_count(const ramify_complex* c) {
    return c ? c->complex->critical_values().size() : 0;
}

ramify_status ramify_complex_critical_value(const ramify_complex* c, size_t i, double* out) {
    return guarded([&] {
        require(c && out, "null argument");
        require(i < c->complex->critical_values().size(), "critical value index out of range");
        *out = c->complex->critical_values()[i];
    });
}

void ramify_complex_free(ramify_complex* c) { delete c; }

// --- persistence ----------------------------------------------------------------

ramify_status ramify_persistence(const ramify_complex* c, int max_dim, int64_t field_prime,
                                 ramify_barcode** out) {
    return guarded([&] {
        require(c && out, "null argument");
        FieldSpec field = field_from_prime(field_prime);
        auto handle = std::make_unique<ramify_barcode_s>();
        handle->field = field;
        handle->complex = c->complex;
        if (field.is_rational()) {
            handle->barcode = compute_persistence<Rational>(*c->complex, max_dim).barcode;
            handle->views = bar_views(std::get<Barcode<Rational>>(handle->barcode));
        } else {
            ZpScope scope(field.prime);
            handle->barcode = compute_persistence<Zp>(*c->complex, max_dim).barcode;
            handle->views = bar_views(std::get<Barcode<Zp>>(handle->barcode));
        }
        *out = handle.release();
    });
}

size_t ramify_barcode_size(const ramify_barcode* b) { return b ? b->views.size() : 0; }

ramify_status ramify_barcode_get(const ramify_barcode* b, size_t i, int* dim, double* birth, double* death) {
    return guarded([&] {
        require(b, "null argument");
        require(i < b->views.size(), "bar index out of range");
        if (dim) *dim = b->views[i].dim;
        if (birth) *birth = b->views[i].birth;
        if (death) *death = b->views[i].death;
    });
}

ramify_status ramify_barcode_export(const ramify_barcode* b, const char* format, char** out_text) {
    return guarded([&] {
        require(b && format && out_text, "null argument");
        std::string fmt(format);
        auto render = [&](const auto& bc) -> std::string {
            auto guard = b->field.is_rational() ? std::optional<ZpScope>()
                                                : std::optional<ZpScope>(std::in_place, b->field.prime);
            if (fmt == "csv") return barcode_csv(bc);
            if (fmt == "json") return barcode_json(bc, *b->complex);
            if (fmt == "svg") return barcode_svg(bc, *b->complex);
            throw InvalidArgumentError("unknown barcode format '" + fmt + "' (csv, json, svg)");
        };
        *out_text = copy_string(std::visit(render, b->barcode));
    });
}

ramify_status ramify_barcode_cz_rank(const ramify_barcode* b, int k, double eps, double eta, size_t* out) {
    return guarded([&] {
        require(b && out, "null argument");
        *out = cz_rank(b->views, k, eps, eta);
    });
}

void ramify_barcode_free(ramify_barcode* b) { delete b; }

// --- matroids ----------------------------------------------------------------------

ramify_status ramify_cophenetic_matroid(const ramify_complex* c, int k, int64_t field_prime,
                                        ramify_matroid** out) {
    return guarded([&] {
        require(c && out, "null argument");
        FieldSpec field = field_from_prime(field_prime);
        FilteredMatroid fm;
        if (field.is_rational()) {
            auto pr = compute_persistence<Rational>(*c->complex, k);
            fm = cophenetic_matroid<Rational>(c->complex, k, pr.barcode, field);
        } else {
            ZpScope scope(field.prime);
            auto pr = compute_persistence<Zp>(*c->complex, k);
            fm = cophenetic_matroid<Zp>(c->complex, k, pr.barcode, field);
        }
        *out = new ramify_matroid_s{std::move(fm)};
    });
}

ramify_status ramify_matroid_demo_s_epsilon(ramify_matroid** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new ramify_matroid_s{coordinate_zeroing_demo_matroid()};
    });
}

size_t ramify_matroid_ground_size(const ramify_matroid* m) { return m ? m->matroid.ground_size() : 0; }

const char* ramify_matroid_label(const ramify_matroid* m, size_t id) {
    if (!m || id >= m->matroid.ground_size()) return nullptr;
    return m->matroid.ground()[id].c_str();
}

ramify_status ramify_matroid_element_birth(const ramify_matroid* m, size_t id, double* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = m->matroid.element_birth(id);
    });
}

size_t ramify_matroid_critical_count(const ramify_matroid* m) {
    return m ? m->matroid.critical_values().size() : 0;
}

ramify_status ramify_matroid_critical_value(const ramify_matroid* m, size_t i, double* out) {
    return guarded([&] {
        require(m && out, "null argument");
        require(i < m->matroid.critical_values().size(), "critical value index out of range");
        *out = m->matroid.critical_values()[i];
    });
}

ramify_status ramify_matroid_rank(const ramify_matroid* m, double eps, const size_t* ids, size_t n_ids,
                                  size_t* out) {
    return guarded([&] {
        require(m && out, "null argument");
        *out = m->matroid.rank_at(eps, ids_to_set(ids, n_ids));
    });
}

ramify_status ramify_matroid_dump(const ramify_matroid* m, char** out_json) {
    return guarded([&] {
        require(m && out_json, "null argument");
        *out_json = copy_string(matroid_dump_json(m->matroid));
    });
}

ramify_status ramify_matroid_check(const ramify_matroid* m, double eps, int* ok, char** out_report) {
    return guarded([&] {
        require(m && ok, "null argument");
        auto step = m->matroid.step_at(eps);
        require(step.has_value(), "scale precedes every critical value");
        auto report = check_submodular(m->matroid.oracle_at_step(*step));
        *ok = report.ok() ? 1 : 0;
        if (out_report)
            *out_report = copy_string("rank oracle at eps=" + format_double(m->matroid.value_of_step(*step)) +
                                      ": " + report.describe());
    });
}

void ramify_matroid_free(ramify_matroid* m) { delete m; }

// --- forests -------------------------------------------------------------------------

ramify_status ramify_forest_build(const ramify_matroid* m, ramify_forest** out) {
    return guarded([&] {
        require(m && out, "null argument");
        auto seeds = auto_seed(m->matroid);
        *out = new ramify_forest_s{build_forest(m->matroid, seeds)};
    });
}

ramify_status ramify_forest_build_seeded(const ramify_matroid* m, const size_t* ids, size_t n_ids, double eps,
                                         ramify_forest** out) {
    return guarded([&] {
        require(m && out, "null argument");
        require(n_ids > 0, "seed must be non-empty");
        std::vector<Seed> seeds{{ids_to_set(ids, n_ids), eps}};
        *out = new ramify_forest_s{build_forest(m->matroid, seeds)};
    });
}

size_t ramify_forest_root_count(const ramify_forest* f) { return f ? f->forest.roots.size() : 0; }

ramify_status ramify_forest_export(const ramify_forest* f, const char* format, char** out_text) {
    return guarded([&] {
        require(f && format && out_text, "null argument");
        std::string fmt(format);
        std::string text;
        if (fmt == "newick")
            text = export_newick(f->forest);
        else if (fmt == "dot")
            text = export_dot(f->forest);
        else if (fmt == "json")
            text = export_json(f->forest);
        else if (fmt == "svg")
            text = export_svg(f->forest);
        else
            throw InvalidArgumentError("unknown forest format '" + fmt + "' (newick, dot, json, svg)");
        *out_text = copy_string(text);
    });
}

void ramify_forest_free(ramify_forest* f) { delete f; }

// --- distances ------------------------------------------------------------------------

ramify_status ramify_distance_matrix(const ramify_matroid* m, double eps, const size_t* ids, size_t n_ids,
                                     ramify_distmat** out) {
    return guarded([&] {
        require(m && out, "null argument");
        ElementSet gens;
        if (ids) {
            gens = ids_to_set(ids, n_ids);
        } else {
            auto step = m->matroid.step_at(eps);
            require(step.has_value(), "scale precedes every critical value");
            for (ElementId e : m->matroid.born_at_step(*step))
                if (m->matroid.rank_at_step(*step, {e}) == 1) gens.push_back(e);
        }
        *out = new ramify_distmat_s{distance_matrix(m->matroid, eps, gens)};
    });
}

size_t ramify_distmat_size(const ramify_distmat* d) { return d ? d->matrix.size() : 0; }

ramify_status ramify_distmat_get(const ramify_distmat* d, size_t i, size_t j, double* out) {
    return guarded([&] {
        require(d && out, "null argument");
        require(i < d->matrix.size() && j < d->matrix.size(), "index out of range");
        *out = d->matrix.at(i, j);
    });
}

ramify_status ramify_distmat_export(const ramify_distmat* d, char** out_csv) {
    return guarded([&] {
        require(d && out_csv, "null argument");
        *out_csv = copy_string(distance_matrix_csv(d->matrix));
    });
}

void ramify_distmat_free(ramify_distmat* d) { delete d; }

}  // extern "C"
