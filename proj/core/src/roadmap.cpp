namespace roadmap {}
