from .model_params import ModelParams
from .posterior_samples import GroupChain, PosteriorSamples
from .mstep_state import MStepState
