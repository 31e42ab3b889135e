from .verification import verification_bp
