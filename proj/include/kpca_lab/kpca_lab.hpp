#ifndef KPCA_LAB_HPP
#define KPCA_LAB_HPP

#include "classify.hpp"
#include "common.hpp"
#include "data.hpp"
#include "eigensolver.hpp"
#include "face_render.hpp"
#include "kernels.hpp"
#include "kpca.hpp"
#include "model_io.hpp"
#include "pca.hpp"
#include "shapes.hpp"
#include "svg.hpp"

#endif
