// Minimal change notification: controllers call emit(), views subscribe.

export class Emitter {
  private handlers = new Set<() => void>();

  subscribe(handler: () => void): () => void {
    this.handlers.add(handler);
    return () => this.handlers.delete(handler);
  }

  emit(): void {
    for (const handler of this.handlers) handler();
  }
}
