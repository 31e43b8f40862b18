#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "atfdwt/dwt.hpp"
#include "atfdwt/error.hpp"
#include "atfdwt/fidelity.hpp"
#include "atfdwt/metrics.hpp"
#include "atfdwt/pipeline.hpp"
#include "atfdwt/ppm.hpp"
#include "atfdwt/stego.hpp"

namespace py = pybind11;
using namespace atfdwt;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<int, py::array::c_style | py::array::forcecast>;

// (H, W) arrays are single-channel, (H, W, C) arrays interleaved.
RasterImage image_from_array(const U8Array& a) {
  if (a.ndim() != 2 && a.ndim() != 3) throw py::value_error("expected an (H, W) or (H, W, C) array");
  const auto h = static_cast<std::size_t>(a.shape(0));
  const auto w = static_cast<std::size_t>(a.shape(1));
  const auto c = a.ndim() == 3 ? static_cast<std::size_t>(a.shape(2)) : 1;
  std::vector<std::uint8_t> samples(a.data(), a.data() + a.size());
  return RasterImage(w, h, c, std::move(samples));
}

U8Array image_to_array(const RasterImage& img) {
  U8Array out({img.height, img.width, img.channels});
  std::memcpy(out.mutable_data(), img.samples.data(), img.samples.size());
  return out;
}

IntMatrix matrix_from_array(const IntArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  return IntMatrix(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)),
                   std::vector<int>(a.data(), a.data() + a.size()));
}

IntArray matrix_to_array(const IntMatrix& m) {
  IntArray out({m.rows(), m.cols()});
  std::copy(m.values().begin(), m.values().end(), out.mutable_data());
  return out;
}

py::dict report_to_dict(const EmbedReport& r) {
  py::list clamped;
  for (const auto& b : r.clamped_blocks) clamped.append(py::make_tuple(b.channel, b.row, b.col));
  py::dict d;
  d["payload_bytes"] = r.payload_bytes;
  d["coefficients_written"] = r.coefficients_written;
  d["adjustments_applied"] = r.adjustments_applied;
  d["max_abs_pixel_delta"] = r.max_abs_pixel_delta;
  d["clamped_blocks"] = clamped;
  return d;
}

py::dict metrics_to_dict(const MetricsReport& m) {
  py::dict d;
  d["mse"] = m.mse;
  d["psnr_db"] = m.psnr_db;
  d["sd_original"] = m.sd_original;
  d["sd_stego"] = m.sd_stego;
  d["image_fidelity"] = m.image_fidelity;
  return d;
}

PpmFormat format_from(const std::string& f) {
  if (f == "P6") return PpmFormat::P6;
  if (f == "P3") return PpmFormat::P3;
  throw py::value_error("format must be 'P6' or 'P3'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Haar-domain image authentication core";

  py::register_exception<Error>(m, "AtfdwtError", PyExc_ValueError);

  m.def("parse_ppm", [](const py::bytes& data) {
    const std::string s = data;
    return image_to_array(parse_ppm(s));
  }, py::arg("data"));
  m.def("write_ppm", [](const U8Array& img, const std::string& format) {
    const auto bytes = write_ppm(image_from_array(img), format_from(format));
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  }, py::arg("image"), py::arg("format") = "P6");

  m.def("forward_haar", [](const IntArray& plane) {
    const auto sb = forward_haar(matrix_from_array(plane));
    return py::make_tuple(matrix_to_array(sb.lr), matrix_to_array(sb.ho), matrix_to_array(sb.vo),
                          matrix_to_array(sb.dg));
  }, py::arg("plane"), "Returns (lr, ho, vo, do).");
  m.def("inverse_haar", [](const IntArray& lr, const IntArray& ho, const IntArray& vo,
                           const IntArray& dg) {
    return matrix_to_array(inverse_haar(SubbandPlane{matrix_from_array(lr), matrix_from_array(ho),
                                                     matrix_from_array(vo), matrix_from_array(dg)}));
  }, py::arg("lr"), py::arg("ho"), py::arg("vo"), py::arg("do"));
  m.def("reconstruct_block", [](int l, int h, int v, int d) {
    const auto px = reconstruct_block(l, h, v, d);
    return py::make_tuple(px[0], px[1], px[2], px[3]);
  });

  m.def("capacity_bytes", &capacity_bytes, py::arg("width"), py::arg("height"), py::arg("channels"));
  m.def("position_pair", [](std::size_t k, int s) {
    const auto p = position_pair(k, StegoKey(s));
    return py::make_tuple(p.first, p.second);
  }, py::arg("k"), py::arg("s"));
  m.def("embed_pair", [](std::uint8_t value, int bit1, int bit2, int p1, int p2) {
    return embed_pair(value, bit1, bit2, {p1, p2});
  });
  m.def("extract_pair", [](std::uint8_t value, int p1, int p2) {
    return extract_pair(value, {p1, p2});
  });
  m.def("adjust", [](std::uint8_t original, std::uint8_t embedded, int p1, int p2) {
    return adjust({original, embedded, {p1, p2}}).value;
  }, py::arg("original"), py::arg("embedded"), py::arg("p1"), py::arg("p2"));

  m.def("embed", [](const U8Array& cover, const U8Array& secret, int s, bool fidelity_adjustment) {
    const auto out = embed_image(image_from_array(cover), image_from_array(secret), StegoKey(s),
                                 EmbedOptions{.fidelity_adjustment = fidelity_adjustment});
    return py::make_tuple(image_to_array(out.stego), report_to_dict(out.report));
  }, py::arg("cover"), py::arg("secret"), py::arg("key_s"), py::arg("adjust") = true,
     "Returns (stego, report).");
  m.def("extract", [](const U8Array& stego, int s) {
    return image_to_array(extract_image(image_from_array(stego), StegoKey(s)));
  }, py::arg("stego"), py::arg("key_s"));
  m.def("verify", [](const U8Array& cover, const U8Array& secret, int s) {
    const auto v = verify_roundtrip(image_from_array(cover), image_from_array(secret), StegoKey(s));
    py::dict d;
    d["matched_bytes"] = v.matched_bytes;
    d["total_bytes"] = v.total_bytes;
    d["intact"] = v.intact();
    d["authentic"] = v.authentic();
    d["report"] = report_to_dict(v.report);
    return d;
  }, py::arg("cover"), py::arg("secret"), py::arg("key_s"));

  m.def("mse", [](const U8Array& a, const U8Array& b) { return mse(image_from_array(a), image_from_array(b)); });
  m.def("psnr", [](const U8Array& a, const U8Array& b) { return psnr(image_from_array(a), image_from_array(b)); });
  m.def("psnr_from_mse", &psnr_from_mse);
  m.def("std_dev", [](const U8Array& a) { return std_dev(image_from_array(a)); });
  m.def("image_fidelity", [](const U8Array& a, const U8Array& b) {
    return image_fidelity(image_from_array(a), image_from_array(b));
  });
  m.def("compute_metrics", [](const U8Array& original, const U8Array& stego) {
    return metrics_to_dict(compute_metrics(image_from_array(original), image_from_array(stego)));
  });
}
