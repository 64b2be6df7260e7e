"""
Losses and latent statistics
============================

SSIM, the content loss over feature stacks, and the two-class LDA used to
find a disease direction, each checked against a slow reference version.
"""
import numpy as np

from crgedit.analysis import direction_from_lda, edit_scale, fit_lda, separation_score
from crgedit.data import PhantomParams, generate_phantom
from crgedit.generator import GeneratorConfig, LatentCode, Space, init_generator, synthesize_with_features
from crgedit.losses import content_loss_generator, ssim, ssim_dissimilarity
from crgedit.reference import closed_form_lda, reference_ssim

rng = np.random.default_rng(0)

# SSIM is 1 for identical images and drops as noise grows
x = generate_phantom(PhantomParams(0.5, noise_sigma=0))[0]
for sigma in (0.0, 0.05, 0.1, 0.2, 0.4):
    y = np.clip(x + sigma * rng.normal(size=x.shape), -1, 1)
    print(f"noise {sigma:.2f}: ssim={ssim(x, y).item():.4f}  reference={reference_ssim(x, y):.4f}"
          f"  1-ssim={ssim_dissimilarity(x, y).item():.4f}")

# content loss between generator feature stacks of two nearby codes
g = init_generator(GeneratorConfig(latent_dim=32, image_side=32, channels=[32, 32, 16, 8]), seed=0)
w = rng.normal(size=32)
_, f0 = synthesize_with_features(g, LatentCode(w, Space.W))
for step in (0.0, 0.1, 0.5, 1.0):
    _, f1 = synthesize_with_features(g, LatentCode(w + step * rng.normal(size=32), Space.W))
    print(f"perturbation {step}: content loss {content_loss_generator(f0, f1).item():.4f}, layer sizes {f1.sizes}")

# LDA on two Gaussian clouds sharing a covariance
d = 16
a = rng.normal(size=(d, d)) / 4
cov = a @ a.T + 0.1 * np.eye(d)
healthy = rng.multivariate_normal(np.zeros(d), cov, size=100)
cardio = rng.multivariate_normal(0.5 * np.ones(d), cov, size=250)
model = fit_lda(healthy, cardio)
v = direction_from_lda(model)
cos = abs(v.values @ closed_form_lda(healthy, cardio) / np.linalg.norm(closed_form_lda(healthy, cardio)))
print("cosine to closed form:", round(cos, 6))
print("projected means", np.round(model.class_means_projected, 3), "stds", np.round(model.class_stds_projected, 3))
print("separation score", round(separation_score(model), 3), "edit scale s", round(edit_scale(model), 3))

# moving healthy points by s along v lands them on the cardiomegaly mean on average
moved = healthy + edit_scale(model) * v.values
print("healthy mean after +s:", round(float(model.project(moved).mean()), 3),
      "cardiomegaly mean:", round(float(model.class_means_projected[1]), 3))
