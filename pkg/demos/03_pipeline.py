"""
The whole pipeline, small
=========================

GAN -> encoder -> inversion -> LDA direction -> edits, on 32x32 phantoms with
tiny networks so it finishes in minutes on a laptop CPU. The numbers are
rough at this scale; the point is to see every stage and its outputs.

    python demos/03_pipeline.py [gan_iterations] [encoder_iterations]
"""
import sys
from pathlib import Path

import numpy as np
import torch

from crgedit.analysis import direction_from_lda, edit_scale, evaluate_edit, fit_lda, separation_score
from crgedit.cli import contact_sheet
from crgedit.data import load_images, record_class, sample_phantom_dataset, save_png
from crgedit.discriminator import DiscriminatorConfig
from crgedit.encoder import EncoderConfig
from crgedit.generator import GeneratorConfig
from crgedit.inversion import InversionConfig, invert_images
from crgedit.losses import ssim_per_image
from crgedit.training import TrainConfig, train_encoder, train_gan

torch.set_num_threads(1)
gan_iters = int(sys.argv[1]) if len(sys.argv) > 1 else 400
enc_iters = int(sys.argv[2]) if len(sys.argv) > 2 else 200
out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

side, dim = 32, 64
channels = [64, 64, 32, 16]
train_set = sample_phantom_dataset(1000, (0.5, 0.5), seed=0, image_side=side)
reals = load_images(train_set, side)


def show(r):
    print(f"  it {r.iteration:4d}", {k: round(v, 3) for k, v in r.losses.items()})


# 1. the GAN
print("training GAN")
gan, _ = train_gan(None, GeneratorConfig(latent_dim=dim, image_side=side, channels=channels),
                   DiscriminatorConfig(image_side=side, channels=channels),
                   TrainConfig(batch_size=16, iterations=gan_iters, log_every=100), images=reals, progress=show)
g = gan.generator
with torch.no_grad():
    samples = g(g.map(torch.randn(16, dim))).numpy()
save_png(contact_sheet([list(samples[:8]), list(samples[8:])]), out / "gan_samples.png")

# 2. the encoder, trained against the frozen generator
print("training encoder")
enc, _ = train_encoder(gan, None, EncoderConfig(image_side=side, latent_dim=dim, blocks_per_branch=3,
                                                channels=[32, 64, 128]),
                       TrainConfig(batch_size=16, iterations=enc_iters, log_every=50), images=reals, progress=show)
print("generator unchanged:", enc.extra["generator_hash_before"] == enc.extra["generator_hash_after"])

# 3. encoder vs optimisation on synthetic targets x = G(w)
with torch.no_grad():
    w = g.map(torch.randn(16, dim))
    x = g.synthesize(w)
    x_enc = g.synthesize(enc.encoder(x))
res = invert_images(gan, enc, x.numpy(), InversionConfig(steps=100), anchor_codes=w.numpy())
x_inv = torch.as_tensor(np.stack([r.reconstruction for r in res]))
print("mean SSIM encoder:", ssim_per_image(x, x_enc).mean().item(),
      " optimised:", ssim_per_image(x, x_inv).mean().item())
save_png(contact_sheet([[a, b, c] for a, b, c in zip(x[:6].numpy(), x_enc[:6].numpy(), x_inv[:6].numpy())]),
         out / "reconstructions.png")

# 4. invert a labelled cohort and fit LDA on the codes
cohort = sample_phantom_dataset(120, (0.4, 0.6), seed=1, image_side=side)
labels = np.array([record_class(r) for r in cohort.records])
codes = np.stack([r.w_star.values for r in invert_images(gan, enc, load_images(cohort, side),
                                                         InversionConfig(steps=100))])
model = fit_lda(codes[labels == 0], codes[labels == 1])
print("separation score:", round(separation_score(model), 3), "regularised:", model.regularized)

# 5. push healthy codes along the direction in units of s
v, s = direction_from_lda(model), edit_scale(model)
report, strips = evaluate_edit(gan, codes[labels == 0][:16], v, [0, s, 2 * s, 3 * s], return_images=True)
print("mean CTR per step:", [None if c is None else round(c, 3) for c in report.mean_ctr])
print("SSIM to base:", [round(c, 3) for c in report.mean_ssim_to_base], "spearman:", report.spearman_rho)
save_png(contact_sheet([list(row) for row in strips[:6]]), out / "edit_strips.png")
