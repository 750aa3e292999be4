"""cartjack: adversarial pixel-budget attacks on price-constrained screenshot agents.

Subpackages
-----------
bench     synthetic shop-page benchmark: layouts, thumbnails, price labels
zoo       toy differentiable victims: visual encoder, grid-pointer agent, anchors
attack    momentum-iterative ensemble attack with input diversity
analysis  cross-attention dominance math, attention aggregation, saliency
defense   input transforms, template OCR, verify-then-act gate
metrics   success rates, perceptual distance, tables, reports
"""

__version__ = "0.1.0"

FORMAT_VERSION = 1
