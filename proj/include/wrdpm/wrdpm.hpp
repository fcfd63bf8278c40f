#ifndef WRDPM_WRDPM_HPP
#define WRDPM_WRDPM_HPP

#include "wrdpm/analysis.hpp"
#include "wrdpm/community.hpp"
#include "wrdpm/embedding.hpp"
#include "wrdpm/errors.hpp"
#include "wrdpm/graph.hpp"
#include "wrdpm/io.hpp"
#include "wrdpm/latent_model.hpp"
#include "wrdpm/linalg.hpp"
#include "wrdpm/random.hpp"
#include "wrdpm/specializations.hpp"

#endif  // WRDPM_WRDPM_HPP
